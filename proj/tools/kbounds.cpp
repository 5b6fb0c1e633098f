#include <iostream>

#include "kbounds/cli/commands.hpp"

int main(int argc, char** argv) {
    return kbounds::cli::run(argc, argv, std::cout, std::cerr);
}
