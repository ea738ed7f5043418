#include <iostream>

#include "gdptrend/cli.hpp"

int main(int argc, char** argv) {
    return gdptrend::cli::run(argc, argv, std::cout, std::cerr);
}
