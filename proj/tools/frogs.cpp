#include <string>
#include <vector>

#include "frogs/cli.hpp"

int main(int argc, char** argv) {
  return frogs::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
