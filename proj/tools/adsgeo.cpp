#include <iostream>

#include "adsgeo/cli.hpp"

int main(int argc, char** argv) { return adsgeo::run_cli(argc, argv, std::cout, std::cerr); }
