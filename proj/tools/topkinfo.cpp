#include <iostream>

#include "topk/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return topk::cli::run(argc, argv, std::cout, std::cerr);
}
