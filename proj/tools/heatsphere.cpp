#include <iostream>
#include <string>
#include <vector>

#include "heatsphere/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return heatsphere::cli::run(args, std::cout, std::cerr);
}
