#include <iostream>

#include "awgshuffle/cli.hpp"

int main(int argc, char** argv) { return awgshuffle::cli_main(argc, argv, std::cout, std::cerr); }
