#include <iostream>

#include "partfn/cli.hpp"

int main(int argc, char** argv) { return partfn::cli::run(argc, argv, std::cout, std::cerr); }
