#include <iostream>
#include <string>
#include <vector>

#include "cpw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cpw::run_cli(args, std::cout, std::cerr);
}
