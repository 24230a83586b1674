#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return chowlab::cli::run(argc, argv, std::cout, std::cerr); }
