#include <iostream>

#include "csd_cli/commands.hpp"

int main(int argc, char** argv) { return csd::cli::run(argc, argv, std::cout, std::cerr); }
