#include <iostream>

#include "matchinfo/cli.hpp"

int main(int argc, char** argv) { return matchinfo::run_cli(argc, argv, std::cout, std::cerr); }
