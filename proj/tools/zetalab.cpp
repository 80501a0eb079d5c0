#include <iostream>

#include "zetalab/report.hpp"

int main(int argc, char** argv) { return zetalab::cli_main(argc, argv, std::cout, std::cerr); }
