#include <iostream>

#include "s2g/cli.hpp"

int main(int argc, char** argv) { return s2g::cli::run(argc, argv, std::cout, std::cerr); }
