#include <iostream>

#include "tmcg/cli.hpp"

int main(int argc, char** argv) { return tmcg::run_cli({argv + 1, argv + argc}, std::cout, std::cerr); }
