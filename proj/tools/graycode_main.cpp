// graycode_main.cpp -- process entry point; all logic lives in the library

#include <iostream>
#include <string>
#include <vector>

#include "graycode/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv + 1, argv + argc);
    return graycode::cli::run(args, std::cin, std::cout, std::cerr);
}
