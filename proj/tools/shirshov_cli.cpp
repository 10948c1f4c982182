#include <iostream>

#include "shirshov/cli.hpp"

int main(int argc, char** argv) { return shirshov::cli_main(argc, argv, std::cout, std::cerr); }
