#include <iostream>

#include "cosmopoly/cli.hpp"

int main(int argc, char** argv) { return cosmopoly::run_cli(argc, argv, std::cout, std::cerr); }
