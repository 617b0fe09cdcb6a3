#include <iostream>

#include "mapbij/cli.hpp"

int main(int argc, char **argv)
{
  return mapbij::cli_main(argc, argv, std::cout, std::cerr);
}
