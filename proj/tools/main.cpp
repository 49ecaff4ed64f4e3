#include "hopfpow_cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return hopfpow::cli::run(argc, argv, std::cout, std::cerr); }
