#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("distortion_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return distortion::cli::run(args, out_, err_);
    }
    std::string stem(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    static std::vector<std::vector<std::string>> rows(const std::string& path) {
        std::vector<std::vector<std::string>> out;
        std::istringstream in(slurp(path));
        std::string line;
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::string cell;
            bool quoted = false;
            for (char c : line) {
                if (c == '"') {
                    quoted = !quoted;
                } else if (c == ',' && !quoted) {
                    cells.push_back(cell);
                    cell.clear();
                } else {
                    cell += c;
                }
            }
            cells.push_back(cell);
            out.push_back(cells);
        }
        return out;
    }
    std::string write_config(const std::string& name, const json& j) const {
        const std::string path = (dir_ / name).string();
        std::ofstream(path) << j.dump();
        return path;
    }

    fs::path dir_;
    std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, DistortionHeisenberg) {
    ASSERT_EQ(run({"distortion", "--family", "heisenberg", "--n-max", "6", "--max-radius", "8", "--out", stem("d")}), 0)
        << err_.str();
    const auto t = rows(stem("d") + ".csv");
    ASSERT_EQ(t.size(), 7u);
    EXPECT_EQ(t[0], (std::vector<std::string>{"n", "power", "element", "certificate_len", "bfs_status", "bfs_len", "ratio"}));
    EXPECT_EQ(t[2], (std::vector<std::string>{"2", "4", "[[1,0,4],[0,1,0],[0,0,1]]", "8", "found", "8", "2"}));
    EXPECT_EQ(t[6][1], "36");
    EXPECT_EQ(t[6][3], "24");
    EXPECT_EQ(t[6][6], "2/3");
    const json j = json::parse(slurp(stem("d") + ".json"));
    EXPECT_EQ(j["summary"]["certificates_verified"], 6);
    EXPECT_TRUE(j.contains("timestamp"));
}

TEST_F(Cli, WitteAllPass) {
    ASSERT_EQ(run({"witte", "--k", "2", "--max-exp", "3", "--out", stem("w")}), 0);
    const auto t = rows(stem("w") + ".csv");
    EXPECT_EQ(t.size(), 1u + 6 * 9);
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_EQ(t[i].back(), "true");
}

TEST_F(Cli, RotationEstimate) {
    ASSERT_EQ(run({"rotation", "--alpha", "0.381966", "--iters", "10000", "--out", stem("r")}), 0);
    const auto t = rows(stem("r") + ".csv");
    EXPECT_EQ(t.back()[0], "10000");
    EXPECT_NEAR(std::stod(t.back()[1]), 0.381966, 1e-4);
}

TEST_F(Cli, EveryCommandRuns) {
    for (const std::string cmd : {"calegari", "egr", "displacement", "spread", "stability"}) {
        EXPECT_EQ(run({cmd, "--out", stem(cmd)}), 0) << cmd << ": " << err_.str();
        EXPECT_TRUE(fs::exists(stem(cmd) + ".csv"));
        EXPECT_TRUE(fs::exists(stem(cmd) + ".json"));
    }
    EXPECT_EQ(run({"ergodic", "--iters", "2000", "--points", "5", "--out", stem("e")}), 0) << err_.str();
    EXPECT_EQ(rows(stem("e") + ".csv")[0],
              (std::vector<std::string>{"seed", "point", "N", "epsilon", "count", "final_sum", "time_average"}));
}

TEST_F(Cli, InvalidInputsExitTwo) {
    EXPECT_EQ(run({"teleport"}), 2);
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"rotation", "--iters", "ten"}), 2);
    EXPECT_EQ(run({"rotation", "--map", "{not json", "--out", stem("x")}), 2);
    EXPECT_EQ(run({"rotation", "--map", R"({"type":"piecewise_linear","breakpoints":[[0,0.5],[0.5,0.2]]})", "--out", stem("x")}), 2);
    EXPECT_EQ(run({"distortion", "--family", "free", "--out", stem("x")}), 2);
    const auto bad = (dir_ / "bad.json").string();
    std::ofstream(bad) << "{\"iters\": ";
    EXPECT_EQ(run({"rotation", "--config", bad, "--out", stem("x")}), 2);
    EXPECT_EQ(run({"rotation", "--config", write_config("c1.json", {{"bogus", 1}}), "--out", stem("x")}), 2);
    EXPECT_EQ(run({"rotation", "--config", write_config("c2.json", {{"iters", "many"}}), "--out", stem("x")}), 2);
    EXPECT_EQ(run({"rotation", "--config", write_config("c3.json", {{"command", "egr"}}), "--out", stem("x")}), 2);
    EXPECT_EQ(run({"rotation", "--config", (dir_ / "missing.json").string()}), 2);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}), 0); }

TEST_F(Cli, CapacityErrorIsNonzero) {
    EXPECT_EQ(run({"distortion", "--family", "heisenberg", "--max-radius", "12", "--cap", "100", "--out", stem("cap")}), 2);
    EXPECT_NE(err_.str().find("cap"), std::string::npos);
    EXPECT_EQ(run({"egr", "--iters", "30", "--cap", "2000", "--out", stem("cap2")}), 2);
}

TEST_F(Cli, VerificationFailureExitsOne) {
    // Huge coefficients push the floating-point residual of the algebraic identity above 1e-12.
    const json maps = json::array({{{"type", "polynomial"}, {"dimension", 1}, {"components", {{{{"c", 1e9}, {"exp", {2, 0}}}}}}}});
    EXPECT_EQ(run({"stability", "--maps", maps.dump(), "--samples", "200", "--out", stem("s")}), 1);
}

TEST_F(Cli, ConfigOverridesFlags) {
    const auto cfg = write_config("cfg.json", {{"command", "rotation"}, {"parameters", {{"iters", 100}}}, {"output", stem("cfgout")}});
    ASSERT_EQ(run({"rotation", "--iters", "10", "--config", cfg}), 0) << err_.str();
    EXPECT_EQ(rows(stem("cfgout") + ".csv").back()[0], "100");
}

TEST_F(Cli, EnvironmentSetsDefaultOutputDirectory) {
    const auto env_dir = dir_ / "env";
    ::setenv(distortion::cli::kOutDirEnv, env_dir.c_str(), 1);
    const int code = run({"witte", "--k", "1", "--max-exp", "1"});
    ::unsetenv(distortion::cli::kOutDirEnv);
    ASSERT_EQ(code, 0);
    EXPECT_TRUE(fs::exists(env_dir / "witte.csv"));
    EXPECT_TRUE(fs::exists(env_dir / "witte.json"));
}

TEST_F(Cli, DeterministicCsv) {
    const std::vector<std::vector<std::string>> runs{
        {"ergodic", "--iters", "5000", "--points", "20", "--seed", "7"},
        {"stability", "--seed", "3", "--samples", "100"},
        {"egr", "--iters", "6"},
        {"distortion", "--family", "mess", "--n-max", "4", "--max-radius", "6"}};
    for (auto args : runs) {
        auto a = args, b = args;
        a.insert(a.end(), {"--out", stem("a")});
        b.insert(b.end(), {"--out", stem("b")});
        ASSERT_EQ(run(a), 0);
        ASSERT_EQ(run(b), 0);
        EXPECT_EQ(slurp(stem("a") + ".csv"), slurp(stem("b") + ".csv")) << args[0];
    }
}

TEST_F(Cli, EchoedConfigReproducesRun) {
    const std::vector<std::vector<std::string>> runs{
        {"rotation", "--map", R"({"type":"composition","maps":[{"type":"piecewise_linear","breakpoints":[[0,0.1],[0.5,0.8]]},{"type":"rotation","alpha":0.3}]})",
         "--partner", R"({"type":"rotation","alpha":0.2})", "--iters", "500", "--grid", "8"},
        {"spread", "--map", R"({"type":"power","map":{"type":"twist","t":1.5},"exponent":2})", "--iters", "10"},
        {"ergodic", "--space", "annulus", "--observable", R"({"type":"displacement"})", "--y", "0.5", "--iters", "300",
         "--points", "4", "--drift", "true"},
        {"egr", "--map", R"j({"type":"toral_affine","matrix":[[2,1],[1,1]],"translation":{"mess_coefficient":"1/2+1/2*sqrt(5)"}})j",
         "--iters", "5"},
        {"stability", "--n-terms", "200"}};
    for (auto args : runs) {
        args.insert(args.end(), {"--out", stem("first")});
        ASSERT_EQ(run(args), 0) << args[0] << ": " << err_.str();
        const json echo = json::parse(slurp(stem("first") + ".json"))["config"];
        const auto cfg = write_config("echo.json", echo);
        ASSERT_EQ(run({args[0], "--config", cfg, "--out", stem("second")}), 0) << args[0] << ": " << err_.str();
        EXPECT_EQ(slurp(stem("first") + ".csv"), slurp(stem("second") + ".csv")) << args[0];
        EXPECT_EQ(json::parse(slurp(stem("second") + ".json"))["config"], echo) << args[0];
    }
}
