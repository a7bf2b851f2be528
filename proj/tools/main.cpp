#include "borelcover/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return borelcover::dispatch(args, std::cout, std::cerr);
}
