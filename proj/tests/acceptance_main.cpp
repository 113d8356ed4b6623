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

// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. `--criterion N` (repeatable) narrows the run.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qrmcube/checks.hpp"

int main(int argc, char** argv) {
  std::string manifest = qrmcube::default_manifest_path();
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--manifest") && i + 1 < argc) {
      manifest = argv[++i];
    } else {
      std::fprintf(stderr,
                   "usage: %s [--criterion N]... [--manifest PATH]\n",
                   argv[0]);
      return 2;
    }
  }

  bool all_pass = true;
  try {
    for (const auto& r : qrmcube::run_acceptance(manifest, which)) {
      all_pass = all_pass && r.pass;
      std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n",
                  r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(), r.seconds,
                  r.detail.empty() ? "" : " -- ", r.detail.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance runner error: %s\n", e.what());
    return 2;
  }
  return all_pass ? 0 : 1;
}
