#include <iostream>

#include "geobip/cli.hpp"

int main(int argc, char** argv) { return geobip::run_cli(argc, argv, std::cout, std::cerr); }
