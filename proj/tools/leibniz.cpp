#include "leibniz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return leibniz::run_cli(argc, argv, std::cout, std::cerr); }
