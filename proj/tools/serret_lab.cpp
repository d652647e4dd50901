#include <iostream>

#include "serret/cli.hpp"

int main(int argc, char** argv) { return serret::run_cli(argc, argv, std::cout, std::cerr); }
