#include <iostream>

#include "borelsc/cli.hpp"

int main(int argc, char** argv) { return borelsc::cli::run(argc, argv, std::cout, std::cerr); }
