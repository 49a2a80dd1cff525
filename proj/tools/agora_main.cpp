#include "agora/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return agora::run_cli(argc, argv, std::cout, std::cerr);
}
