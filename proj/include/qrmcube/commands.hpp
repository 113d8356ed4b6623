// Copyright qrmcube contributors
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

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace qrmcube {

/// Result of one CLI operation. A fail status maps to a nonzero process
/// exit code; payload is the machine-readable half, human the text half.
struct CommandResult {
  bool ok = false;
  nlohmann::json payload;
  std::string human;
};

CommandResult cmd_verify_basis(const std::string& name);
CommandResult cmd_census(const std::string& code);
CommandResult cmd_logical_action(const std::string& code);
CommandResult cmd_appendix_tables(const std::string& manifest_path);
CommandResult cmd_export(const std::string& basis, const std::string& layout,
                         const std::string& format, const std::string& out);
CommandResult cmd_factory_analyze(const std::string& code, double p,
                                  int w_max);
CommandResult cmd_factory_mc(const std::string& code, double p,
                             std::uint64_t samples, std::uint64_t seed);
CommandResult cmd_qrm(int m, int q, int r, std::optional<int> puncture);
CommandResult cmd_reproduce(const std::string& manifest_path);

}  // namespace qrmcube
