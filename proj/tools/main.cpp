#include <iostream>

#include "csnet/cli.hpp"

int main(int argc, char** argv) { return csnet::run_cli(argc, argv, std::cout, std::cerr); }
