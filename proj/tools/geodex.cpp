#include <iostream>

#include "geodex/app/cli.hpp"

int main(int argc, char** argv) { return geodex::app::run_cli(argc, argv, std::cout, std::cerr); }
