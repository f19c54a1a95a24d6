#include <iostream>

#include "qwb/cli/commands.hpp"

int main(int argc, char** argv) { return qwb::cli::run_cli(argc, argv, std::cout, std::cerr); }
