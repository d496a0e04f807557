#include <iostream>
#include <string>
#include <vector>

#include "gps/commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return gps::run_cli(args, std::cout, std::cerr);
}
