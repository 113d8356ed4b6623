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
#include <string>
#include <vector>

#include "qrmcube/qrm.hpp"
#include "qrmcube/util.hpp"

namespace qrmcube {

/// Leading-order output infidelity: prefactor * p^d.
double leading_order(std::uint64_t prefactor, int d, double p);

struct WilsonInterval {
  double lo = 0;
  double hi = 0;
};

/// Error model: i.i.d. Z errors with probability p per qubit, detected
/// by the X stabilizers; a run is accepted iff the syndrome is trivial,
/// and an accepted error is a logical fault iff it is not a Z
/// stabilizer. Probabilities are assembled from exact per-weight integer
/// counts, so results do not depend on how the work was sharded.
struct RateReport {
  std::string code;
  double p = 0;
  int w_max = 0;
  double p_accept = 0;
  double p_undetected_logical = 0;
  double conditional_infidelity = 0;
  double truncation_bound = 0;  // binomial mass beyond w_max
  std::vector<std::uint64_t> accepted_by_weight;
  std::vector<std::uint64_t> logical_by_weight;
};

/// Exact sums over all error supports of weight <= w_max. Refuses when
/// C(n, w_max) exceeds 10^8.
RateReport truncated_rates(const CssCode& c, double p, int w_max,
                           ExecPolicy pol = parallel_policy);

struct McReport {
  std::string code;
  double p = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t accepted = 0;
  std::uint64_t logical = 0;
  double p_accept = 0;
  double p_undetected_logical = 0;
  double conditional_infidelity = 0;
  WilsonInterval accept_ci;       // 95% Wilson
  WilsonInterval conditional_ci;  // 95% Wilson, conditional on acceptance
};

/// Monte Carlo with the same predicates as truncated_rates. Sample i
/// draws its qubit errors from counter stream i (see util.hpp), so
/// reports are bitwise reproducible for a given seed regardless of
/// thread count.
McReport monte_carlo(const CssCode& c, double p, std::uint64_t samples,
                     std::uint64_t seed, ExecPolicy pol = parallel_policy);

struct FactorySpec {
  std::string code;
  int inputs = 0;           // consumed magic states
  std::string output;      // produced state(s)
  int d_z = 0;
  std::uint64_t prefactor = 0;  // minimum-weight nontrivial Z logicals
};

/// The shipped factories with distance and prefactor recomputed from
/// the census kernels (never read from a table).
std::vector<FactorySpec> factory_catalog(ExecPolicy pol = parallel_policy);

WilsonInterval wilson(std::uint64_t k, std::uint64_t n, double z = 1.96);

std::string rate_report_to_json(const RateReport& r);
std::string mc_report_to_json(const McReport& r);

}  // namespace qrmcube
