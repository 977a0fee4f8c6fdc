#include <iostream>

#include "rrc/commands.hpp"

int main(int argc, char** argv) { return rrc::cli::run(argc, argv, std::cout, std::cerr); }
