#include "lincycle/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return lincycle::cli::run(argc, argv, std::cout, std::cerr);
}
