#include <iostream>
#include <vector>

#include "kinval/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kinval::run_cli(args, std::cout, std::cerr);
}
