#include <iostream>
#include <string>
#include <vector>

#include "ncps/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ncps::run_command(args, std::cout, std::cerr);
}
