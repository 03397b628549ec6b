#include <iostream>

#include "normeq/cli.hpp"

int main(int argc, char** argv)
{
    return normeq::run_cli(argc, argv, std::cout, std::cerr);
}
