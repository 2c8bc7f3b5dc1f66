#include "pi1/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pi1::run_cli(args, std::cout, std::cerr);
}
