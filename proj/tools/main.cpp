#include <string>
#include <vector>

#include "meshcore/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return meshcore::run_cli(args);
}
