#include "strongconv/cli/cli.hpp"

int main(int argc, char** argv) { return strongconv::cli::run_command(argc, argv); }
