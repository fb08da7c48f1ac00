#include <iostream>
#include <string>
#include <vector>

#include "pss/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return pss::run_cli(args, std::cout, std::cerr);
}
