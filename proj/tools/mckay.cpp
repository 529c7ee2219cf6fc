#include <iostream>

#include "mckay/cli.hpp"

int main(int argc, char** argv) { return mckay::cli::run(argc, argv, std::cout, std::cerr); }
