#include <iostream>

#include "bbc_cli.hpp"

int main(int argc, char** argv) { return bbc::cli::run_cli(argc, argv, std::cout, std::cerr); }
