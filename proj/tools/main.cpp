#include "minorlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return minorlab::main_entry(argc, argv, std::cout, std::cerr);
}
