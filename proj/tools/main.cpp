#include <iostream>

#include "dowlab/cli.hpp"

int main(int argc, char** argv) { return dowlab::run_cli(argc, argv, std::cout, std::cerr); }
