#include <iostream>

#include "k3iso/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    k3iso::CommandResult r = k3iso::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
