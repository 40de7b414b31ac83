#include <iostream>
#include <string>
#include <vector>

#include "isoperim/cli.hpp"

int main(int argc, char** argv)
{
    return isoperim::cli::run(std::vector<std::string>(argv + 1, argv + argc),
                              std::cout, std::cerr);
}
