#include <iostream>

#include "sparserips/cli.hpp"

int main(int argc, char** argv) { return sparse_rips::run_cli(argc, argv, std::cout, std::cerr); }
