#include <iostream>

#include "sgalg/cli.hpp"

int main(int argc, char** argv) { return sgalg::run(argc, argv, std::cout, std::cerr); }
