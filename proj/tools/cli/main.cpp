#include "cli.hpp"

int main(int argc, char** argv) { return distortion::cli::run(argc, argv); }
