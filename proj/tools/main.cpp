#include <iostream>

#include "rslab/cli.hpp"

int main(int argc, char** argv) { return rslab::cli::run(argc, argv, std::cout, std::cerr); }
