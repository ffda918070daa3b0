#include <iostream>

#include "swpm_cli/cli.hpp"

int main(int argc, char** argv) { return swpm::cli::run(argc, argv, std::cout, std::cerr); }
