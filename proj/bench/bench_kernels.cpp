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

// Times each heavy enumeration kernel in its serial-reference and
// OpenMP form and reports the speedup. Outputs are compared for
// equality while timing, so this doubles as a consistency run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qrmcube/distance.hpp"
#include "qrmcube/factory.hpp"
#include "qrmcube/registry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const std::string& name, double serial, double parallel,
            bool equal) {
  std::printf("%-44s %9.3f s %9.3f s %6.2fx %s\n", name.c_str(), serial,
              parallel, serial / parallel, equal ? "" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n");
#endif
  std::printf("%-44s %11s %11s %7s\n", "kernel", "serial", "parallel",
              "speedup");
  using namespace qrmcube;

  {
    WeightCensus a, b;
    double ts = time_of([&] { a = min_weight_words({7, 4}, serial_policy); });
    double tp = time_of([&] { b = min_weight_words({7, 4}, parallel_policy); });
    report("min_weight_words rm(7,4)", ts, tp,
           a.d == b.d && a.count == b.count);
  }
  {
    F2Matrix g = rm_generators({6, 2});  // rank 22: 4M codewords
    WeightCensus a, b;
    double ts = time_of([&] { a = brute_force_census(g, serial_policy); });
    double tp = time_of([&] { b = brute_force_census(g, parallel_policy); });
    report("brute_force_census rm(6,2)", ts, tp,
           a.d == b.d && a.count == b.count);
  }
  {
    std::pair<std::uint64_t, std::uint64_t> a, b;
    double ts = time_of([&] { a = classify_big_unfolded_w4(serial_policy); });
    double tp = time_of([&] { b = classify_big_unfolded_w4(parallel_policy); });
    report("classify_big_unfolded_w4", ts, tp, a == b);
  }
  {
    const CssCode& big = code_by_label("big-unfolded");
    RateReport a, b;
    double ts =
        time_of([&] { a = truncated_rates(big, 1e-3, 5, serial_policy); });
    double tp =
        time_of([&] { b = truncated_rates(big, 1e-3, 5, parallel_policy); });
    report("truncated_rates big-unfolded w_max=5", ts, tp,
           a.accepted_by_weight == b.accepted_by_weight &&
               a.logical_by_weight == b.logical_by_weight);
  }
  {
    const CssCode& rubik = code_by_label("rubik");
    RateReport a, b;
    double ts =
        time_of([&] { a = truncated_rates(rubik, 1e-3, 5, serial_policy); });
    double tp =
        time_of([&] { b = truncated_rates(rubik, 1e-3, 5, parallel_policy); });
    report("truncated_rates rubik w_max=5", ts, tp,
           a.accepted_by_weight == b.accepted_by_weight &&
               a.logical_by_weight == b.logical_by_weight);
  }
  {
    const CssCode& q301 = code_by_label("qrm301");
    McReport a, b;
    double ts = time_of(
        [&] { a = monte_carlo(q301, 0.05, 4000000, 7, serial_policy); });
    double tp = time_of(
        [&] { b = monte_carlo(q301, 0.05, 4000000, 7, parallel_policy); });
    report("monte_carlo qrm301 4e6 samples", ts, tp,
           a.accepted == b.accepted && a.logical == b.logical);
  }
  return 0;
}
