#include <iostream>
#include <string>
#include <vector>

#include "btlogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bt::dispatch(args, std::cout, std::cerr);
}
