#include "refdist/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return refdist::run_cli(argc, argv, std::cout, std::cerr);
}
