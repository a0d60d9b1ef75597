#include "crossvar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return crossvar::cli::run_cli(argc, argv, std::cout, std::cerr);
}
