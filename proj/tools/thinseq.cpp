#include <iostream>

#include "thinseq/cli.hpp"

int main(int argc, char** argv) { return thinseq::run_cli(argc, argv, std::cout, std::cerr); }
