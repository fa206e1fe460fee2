#include <iostream>

#include "qwc/cli/commands.hpp"

int main(int argc, char** argv) {
    return qwc::cli::run(argc, argv, std::cout, std::cerr);
}
