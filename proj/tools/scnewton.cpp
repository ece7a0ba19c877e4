#include <iostream>

#include "scnewton/cli_io.hpp"

int main(int argc, char** argv) { return scnewton::cli_io::run_cli(argc, argv, std::cout, std::cerr); }
