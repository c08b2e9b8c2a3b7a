#include <iostream>

#include "chromanote/cli.h"

int main(int argc, char** argv) { return chromanote::cli::run(argc, argv, std::cout, std::cerr); }
