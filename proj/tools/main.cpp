#include <iostream>

#include "shops/cli.hpp"

int main(int argc, char** argv) {
  return shops::cli::command_dispatch(argc, argv, std::cout, std::cerr);
}
