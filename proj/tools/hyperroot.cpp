#include "hyperroot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperroot::run_cli(args, std::cout, std::cerr);
}
