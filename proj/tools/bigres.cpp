#include <iostream>

#include "bigres/cli.hpp"

int main(int argc, char** argv) { return bigres::cli::run(argc, argv, std::cout, std::cerr); }
