#include "elp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return elp::cli::run_command(std::move(args), std::cout, std::cerr);
}
