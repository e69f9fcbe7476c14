#include <iostream>

#include "horadam/cli/cli.hpp"

int main(int argc, char** argv) { return horadam::cli::main_entry(argc, argv, std::cout, std::cerr); }
