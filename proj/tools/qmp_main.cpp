#include <iostream>

#include "qmp/cli.hpp"

int main(int argc, char** argv) { return qmp::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
