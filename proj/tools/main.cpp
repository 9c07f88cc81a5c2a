#include <string>
#include <vector>

#include "qti/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qti::cli::run(args);
}
