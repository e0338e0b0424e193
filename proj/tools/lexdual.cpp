#include <iostream>

#include "lexdual/cli.hpp"

int main(int argc, char** argv) { return lexdual::cli::run(argc, argv, std::cout, std::cerr); }
