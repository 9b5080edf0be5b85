// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_TOOLS_CLI_APP_HPP
#define MSGAME_TOOLS_CLI_APP_HPP

#include <string>
#include <vector>

namespace msgame {

// Runs the command-line front end on the given arguments (program name
// excluded).  Returns the process exit code: 0 success, 2 verification
// failure, 3 illegal move, 4 configuration or parse error.
int run_cli(std::vector<std::string> args);

}  // namespace msgame

#endif  // MSGAME_TOOLS_CLI_APP_HPP
