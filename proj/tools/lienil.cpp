#include <iostream>

#include "lienil/cli.hpp"

int main(int argc, char** argv) { return lienil::cli::run(argc, argv, std::cout, std::cerr); }
