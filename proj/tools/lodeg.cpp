#include <iostream>

#include "lodeg/cli.hpp"

int main(int argc, char** argv) { return lodeg::cli::main(argc, argv, std::cout, std::cerr); }
