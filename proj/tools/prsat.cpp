#include <prs/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return prs::run_cli(argc, argv, std::cout, std::cerr);
}
