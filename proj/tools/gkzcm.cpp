#include "gkzcm/cli.hpp"

int main(int argc, char** argv) { return gkzcm::cli::run_cli(argc, argv); }
