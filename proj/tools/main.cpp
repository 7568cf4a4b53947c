#include "collin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return collin::cli_dispatch({argv, argv + argc}, std::cout, std::cerr);
}
