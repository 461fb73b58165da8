#include <iostream>

#include "wct/cli.hpp"

int main(int argc, char** argv) { return wct::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
