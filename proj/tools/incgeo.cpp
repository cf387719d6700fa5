#include <string>
#include <vector>

#include "incgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return incgeo::cli::run(args);
}
