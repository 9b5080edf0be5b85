// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include <string>
#include <vector>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return msgame::run_cli(std::move(args));
}
