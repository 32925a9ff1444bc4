#include <iostream>

#include "chdyn/cli.hpp"

int main(int argc, char** argv) { return chdyn::cli::run(argc, argv, std::cout, std::cerr); }
