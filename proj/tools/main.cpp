#include <iostream>

#include "sgenergy/cli_app.hpp"

int main(int argc, char** argv) {
    return sgenergy::run_cli(argc, argv, std::cout, std::cerr);
}
