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

#include <string>
#include <vector>

namespace qrmcube {

/// One end-to-end verification block. All expected reference numbers
/// live in a single JSON manifest so the oracle is auditable in one
/// place; tolerances and thresholds are pinned in the code here.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

/// Runs the selected verification blocks (1..10; empty = all) against
/// the manifest. Never throws for a failed check; throws only for a
/// broken environment (missing manifest, bad JSON).
std::vector<CriterionResult> run_acceptance(const std::string& manifest_path,
                                            std::vector<int> which = {});

std::string default_manifest_path();
std::string golden_file_path(const std::string& name);

}  // namespace qrmcube
