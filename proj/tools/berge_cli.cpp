#include <iostream>
#include <string>
#include <vector>

#include "berge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return berge::run_cli(args, std::cout, std::cerr);
}
