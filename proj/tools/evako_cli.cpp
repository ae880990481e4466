#include <iostream>

#include "evako/cli.hpp"

int main(int argc, char** argv) { return evako::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
