#include <iostream>
#include <string>
#include <vector>

#include "regzeta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return regzeta::run_cli(args, std::cout, std::cerr);
}
