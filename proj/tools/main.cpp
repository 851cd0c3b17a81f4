#include <iostream>

#include "ogpush/cli.hpp"

int main(int argc, char** argv) { return ogpush::cli::run(argc, argv, std::cout, std::cerr); }
