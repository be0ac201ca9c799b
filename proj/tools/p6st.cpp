#include "p6/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return p6::cli::run(args, std::cout, std::cerr);
}
