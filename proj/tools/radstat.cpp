#include <iostream>

#include "radstat/cli.hpp"

int main(int argc, char** argv) { return radstat::run_cli(argc, argv, std::cout, std::cerr); }
