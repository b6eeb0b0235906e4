#include <iostream>

#include "rightsize/cli.hpp"

int main(int argc, char** argv) { return rightsize::cli_main(argc, argv, std::cout, std::cerr); }
