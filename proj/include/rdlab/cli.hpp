// Copyright 2026 The rdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rdlab/scenario.hpp"

namespace rdlab {

/// Builds a ScenarioConfig from `rdlab <subcommand> [flags]` arguments
/// (args[0] is the program name). Values from --config are applied first,
/// explicit flags override them. Throws ConfigError / IoError.
ScenarioConfig parse_command_line(const std::vector<std::string>& args);

/// Full CLI entry point; returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdlab
