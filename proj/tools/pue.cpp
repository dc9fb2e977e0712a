#include "pue/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pue::cli::run(argc, argv, std::cout, std::cerr); }
