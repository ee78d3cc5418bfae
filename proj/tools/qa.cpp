#include "qa/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qa::run_cli(argc, argv, std::cout, std::cerr); }
