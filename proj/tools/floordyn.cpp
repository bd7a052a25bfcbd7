#include <iostream>
#include <string>
#include <vector>

#include "floordyn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return floordyn::cli::run(args, std::cout, std::cerr);
}
