// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latstab::cli::run(args, std::cout, std::cerr, latstab::cli::Environment::from_process());
}
