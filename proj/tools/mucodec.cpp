#include <iostream>
#include <string>
#include <vector>

#include "mucode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mucode::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
