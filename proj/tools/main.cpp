#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return regdec::cli::run(args, std::cin, std::cout, std::cerr);
}
