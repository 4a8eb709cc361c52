#include "homotopes/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return homotopes::cli::run(argc, argv, std::cout, std::cerr); }
