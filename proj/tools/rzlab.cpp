#include <iostream>

#include "rzlab/cli.hpp"

int main(int argc, char** argv) { return rzlab::cli::run(argc, argv, std::cout, std::cerr); }
