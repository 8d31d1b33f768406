#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distortion::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "DISTORTION_OUT_DIR";

/// Runs one subcommand. `args` excludes the program name. Writes <stem>.csv and
/// <stem>.json, where the stem defaults to $DISTORTION_OUT_DIR/<command>.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace distortion::cli
