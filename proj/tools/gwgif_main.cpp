#include <iostream>

#include "gwgif/commands.hpp"

int main(int argc, char** argv) { return gwgif::cli_main(argc, argv, std::cout, std::cerr); }
