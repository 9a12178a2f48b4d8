#include <iostream>

#include "otype/cli.hpp"

int main(int argc, char** argv) { return otype::cli::run(argc, argv, std::cout, std::cerr); }
