#include <iostream>

#include "elastica/cli.hpp"

int main(int argc, char** argv) {
    return elastica::cli_run(argc, argv, std::cout, std::cerr);
}
