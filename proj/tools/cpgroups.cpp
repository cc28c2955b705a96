#include <iostream>

#include "cpgroups/cli.hpp"

int main(int argc, char** argv) { return cpg::run_cli(argc, argv, std::cout, std::cerr); }
