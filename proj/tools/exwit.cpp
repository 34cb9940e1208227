#include <iostream>

#include "exwit/app/commands.hpp"

int main(int argc, char** argv) { return exwit::app::run_cli(argc, argv, std::cout, std::cerr); }
