#include <iostream>

#include "coedit/cli.hpp"

int main(int argc, char** argv) { return coedit::run_cli(argc, argv, std::cout, std::cerr); }
