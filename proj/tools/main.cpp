#include <iostream>
#include <string>
#include <vector>

#include "bessel_geom/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bessel_geom::cli::run(args, std::cout, std::cerr);
}
