#include <iostream>

#include "hypsec/cli/cli.hpp"

int main(int argc, char** argv) { return hypsec::cli::main_entry(argc, argv, std::cout, std::cerr); }
