#include <iostream>

#include "padicft/cli.hpp"

int main(int argc, char** argv) { return padicft::cli::run(argc, argv, std::cout, std::cerr); }
