#include <iostream>
#include <string>
#include <vector>

#include "dpva/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dpva::run_command(args, std::cout, std::cerr);
}
