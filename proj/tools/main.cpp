#include <iostream>

#include "bspline_cli/commands.hpp"

int main(int argc, char** argv)
{
    return bspline::cli::run(argc, argv, std::cout, std::cerr);
}
