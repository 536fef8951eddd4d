#include "boxworld_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return boxworld::cli::main(argc, argv, std::cout, std::cerr); }
