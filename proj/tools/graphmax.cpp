#include <iostream>

#include "graphmax/cli_commands.hpp"

int main(int argc, char** argv) {
    return graphmax::cli::run(argc, argv, std::cout, std::cerr);
}
