#include <iostream>

#include "pns/cli.hpp"

int main(int argc, char** argv) { return pns::cli::run(argc, argv, std::cout, std::cerr); }
