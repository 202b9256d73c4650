#include <iostream>

#include "quatdyn/cli.hpp"

int main(int argc, char** argv) { return quatdyn::run_cli(argc, argv, std::cout, std::cerr); }
