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
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qrmcube/qrm.hpp"
#include "qrmcube/util.hpp"

namespace qrmcube {

/// Affine subspace of F2^m in canonical form: the basis rows are in
/// reduced echelon form over the coordinates and the offset is reduced
/// against the basis (zero at every pivot), so each subspace is
/// enumerated exactly once.
struct AffineSubspace {
  int m = 0;
  std::vector<std::uint32_t> basis;  // RREF rows, pivots ascending
  std::uint32_t offset = 0;

  int dim() const { return int(basis.size()); }
  /// Its indicator over the 2^m cube vertices; weight 2^dim.
  BitVec indicator() const;
  /// Member vertices, offset first, then offset^span in subset order.
  std::vector<std::uint32_t> members() const;
};

/// Visits every dimension-k affine subspace of F2^m exactly once, in a
/// fixed order (pivot sets ascending, then fill pattern, then offset).
/// Streaming: nothing is materialized. Single consumer.
void for_each_affine(int m, int k,
                     const std::function<void(const AffineSubspace&)>& fn);

/// Number of dimension-k affine subspaces of F2^m:
/// 2^(m-k) * prod_{i<k} (2^(m-i)-1)/(2^(k-i)-1).
std::uint64_t affine_count(int m, int k);

/// Number of minimum-weight codewords of RM_m(r):
/// 2^r * prod_{i<r} (2^(m-i)-1)/(2^(r-i)-1).
std::uint64_t closed_form_count(int m, int r);

struct WeightCensus {
  std::string code;
  std::optional<int> d;  // empty when there is no nonzero codeword
  std::uint64_t count = 0;
  std::string method;  // "affine-enumeration" or "brute-force"
  double runtime_ms = 0;
};

/// Minimum-weight census of RM_m(r) by affine-subspace enumeration;
/// every enumerated indicator is asserted to be a codeword.
WeightCensus min_weight_words(RmParams p, ExecPolicy pol = parallel_policy);

/// Exact census by enumerating all 2^rank codewords; refuses above
/// rank 26.
WeightCensus brute_force_census(const F2Matrix& m,
                                ExecPolicy pol = parallel_policy);

/// Census of the nontrivial Z logicals of a small code by enumerating
/// the whole Z normalizer (needs dim <= 26).
WeightCensus nontrivial_logical_census(const CssCode& c,
                                       ExecPolicy pol = parallel_policy);

/// Minimum-weight nontrivial Z logicals of a punctured QRM code:
/// parent minimum-weight words through the punctured position, with the
/// position dropped. Each is asserted to be a nontrivial logical.
WeightCensus punctured_min_logicals(const CssCode& punctured,
                                    ExecPolicy pol = parallel_policy);

/// Splits the 10416 weight-4 Z-normalizer elements of the 6-cube codes
/// into Z stabilizers of the big unfolded code and nontrivial logicals;
/// returns (trivial, nontrivial) = (2160, 8256).
std::pair<std::uint64_t, std::uint64_t> classify_big_unfolded_w4(
    ExecPolicy pol = parallel_policy);

std::string census_to_json(const WeightCensus& c);

}  // namespace qrmcube
