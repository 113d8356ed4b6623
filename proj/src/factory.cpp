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

#include "qrmcube/factory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "qrmcube/distance.hpp"

namespace qrmcube {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  using u128 = unsigned __int128;
  u128 c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * u128(n - i) / u128(i + 1);
    if (c >= cap) return cap;
  }
  return std::uint64_t(c);
}

double leading_order(std::uint64_t prefactor, int d, double p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("leading_order: p must be in [0,1]");
  if (d < 0) throw std::invalid_argument("leading_order: d must be >= 0");
  return double(prefactor) * std::pow(p, d);
}

namespace {

// Accept/logical predicates shared by the exact and Monte Carlo paths.
// Supports codes with n <= 128 and rank(hx) <= 64.
struct Predicates {
  int n = 0;
  std::vector<std::uint64_t> col_syndrome;  // per qubit, bits over hx rows
  std::vector<std::array<std::uint64_t, 2>> hz_rows;
  std::vector<int> hz_pivots;

  explicit Predicates(const CssCode& c) : n(c.n) {
    if (c.n > 128)
      throw std::invalid_argument("factory kernels support n <= 128");
    EchelonForm hx(c.hx);
    if (hx.rank() > 64)
      throw std::invalid_argument("factory kernels support rank(hx) <= 64");
    col_syndrome.assign(std::size_t(n), 0);
    for (std::size_t r = 0; r < hx.rank(); ++r)
      for (int j = 0; j < n; ++j)
        if (hx.rows()[r].get(std::size_t(j)))
          col_syndrome[std::size_t(j)] |= std::uint64_t(1) << r;
    EchelonForm hz(c.hz);
    for (std::size_t r = 0; r < hz.rank(); ++r) {
      std::array<std::uint64_t, 2> row{0, 0};
      auto words = hz.rows()[r].words();
      for (std::size_t i = 0; i < words.size(); ++i) row[i] = words[i];
      hz_rows.push_back(row);
      hz_pivots.push_back(int(hz.pivots()[r]));
    }
  }

  bool in_hz(std::array<std::uint64_t, 2> v) const {
    for (std::size_t k = 0; k < hz_rows.size(); ++k) {
      int p = hz_pivots[k];
      if ((v[p >> 6] >> (p & 63)) & 1) {
        v[0] ^= hz_rows[k][0];
        v[1] ^= hz_rows[k][1];
      }
    }
    return (v[0] | v[1]) == 0;
  }
};

struct WeightCounts {
  std::vector<std::uint64_t> accepted;
  std::vector<std::uint64_t> logical;
};

// Enumerates weight-w supports with first position c0, counting accepted
// and accepted-but-logical ones.
void scan_first_position(const Predicates& pred, int w, int c0,
                         std::uint64_t& accepted, std::uint64_t& logical) {
  int n = pred.n;
  std::vector<int> idx(std::size_t(w), 0);
  idx[0] = c0;
  for (int i = 1; i < w; ++i) idx[std::size_t(i)] = c0 + i;
  if (idx.back() >= n) return;
  while (true) {
    std::uint64_t syn = 0;
    for (int i = 0; i < w; ++i) syn ^= pred.col_syndrome[std::size_t(idx[i])];
    if (syn == 0) {
      ++accepted;
      std::array<std::uint64_t, 2> word{0, 0};
      for (int i = 0; i < w; ++i)
        word[idx[i] >> 6] |= std::uint64_t(1) << (idx[i] & 63);
      if (!pred.in_hz(word)) ++logical;
    }
    // next combination with fixed idx[0]
    int i = w - 1;
    while (i >= 1 && idx[std::size_t(i)] == n - (w - i)) --i;
    if (i < 1) break;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < w; ++j)
      idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
}

WeightCounts count_by_weight(const Predicates& pred, int w_max,
                             ExecPolicy pol) {
  WeightCounts counts;
  counts.accepted.assign(std::size_t(w_max) + 1, 0);
  counts.logical.assign(std::size_t(w_max) + 1, 0);
  counts.accepted[0] = 1;  // empty support, trivial syndrome, not logical
  for (int w = 1; w <= w_max; ++w) {
    int firsts = pred.n - w + 1;
    std::vector<std::uint64_t> acc(std::size_t(firsts), 0);
    std::vector<std::uint64_t> log(std::size_t(firsts), 0);
    if (pol.mode == Exec::serial) {
      for (int c0 = 0; c0 < firsts; ++c0)
        scan_first_position(pred, w, c0, acc[std::size_t(c0)],
                            log[std::size_t(c0)]);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
      for (int c0 = 0; c0 < firsts; ++c0)
        scan_first_position(pred, w, c0, acc[std::size_t(c0)],
                            log[std::size_t(c0)]);
    }
    for (int c0 = 0; c0 < firsts; ++c0) {
      counts.accepted[std::size_t(w)] += acc[std::size_t(c0)];
      counts.logical[std::size_t(w)] += log[std::size_t(c0)];
    }
  }
  return counts;
}

// P[support weight == w] for one sample, computed in the log domain so
// p^7-scale terms keep full relative precision.
double weight_prob(int n, int w, double p) {
  if (p <= 0) return w == 0 ? 1.0 : 0.0;
  if (p >= 1) return w == n ? 1.0 : 0.0;
  return std::exp(double(w) * std::log(p) +
                  double(n - w) * std::log1p(-p));
}

}  // namespace

RateReport truncated_rates(const CssCode& c, double p, int w_max,
                           ExecPolicy pol) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("truncated_rates: p must be in [0,1]");
  if (w_max < 0 || w_max > c.n)
    throw std::invalid_argument("truncated_rates: w_max out of range");
  constexpr std::uint64_t kBudget = 100000000;  // 10^8 supports per weight
  if (binomial_capped(c.n, w_max, kBudget + 1) > kBudget)
    throw budget_error(
        "truncated_rates: C(n, w_max) exceeds the 10^8 support budget "
        "(n = " + std::to_string(c.n) + ", w_max = " + std::to_string(w_max) +
        "); refusing");
  Predicates pred(c);
  WeightCounts counts = count_by_weight(pred, w_max, pol);

  RateReport r;
  r.code = c.label;
  r.p = p;
  r.w_max = w_max;
  r.accepted_by_weight = counts.accepted;
  r.logical_by_weight = counts.logical;
  double covered = 0;
  for (int w = 0; w <= w_max; ++w) {
    double q = weight_prob(c.n, w, p);
    r.p_accept += double(counts.accepted[std::size_t(w)]) * q;
    r.p_undetected_logical += double(counts.logical[std::size_t(w)]) * q;
    covered += double(binomial_capped(c.n, w, ~std::uint64_t(0))) * q;
  }
  r.truncation_bound = std::clamp(1.0 - covered, 0.0, 1.0);
  r.conditional_infidelity =
      r.p_accept > 0 ? r.p_undetected_logical / r.p_accept : 0.0;
  return r;
}

WilsonInterval wilson(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  double nn = double(n);
  double phat = double(k) / nn;
  double z2 = z * z;
  double denom = 1.0 + z2 / nn;
  double center = phat + z2 / (2.0 * nn);
  double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, (center - half) / denom),
          std::min(1.0, (center + half) / denom)};
}

McReport monte_carlo(const CssCode& c, double p, std::uint64_t samples,
                     std::uint64_t seed, ExecPolicy pol) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("monte_carlo: p must be in [0,1]");
  if (samples < 1)
    throw std::invalid_argument("monte_carlo: samples must be >= 1");
  Predicates pred(c);
  int n = pred.n;

  auto run_one = [&](std::uint64_t i, std::uint64_t& acc, std::uint64_t& log) {
    std::uint64_t state = counter_stream_state(seed, i);
    std::array<std::uint64_t, 2> word{0, 0};
    std::uint64_t syn = 0;
    for (int j = 0; j < n; ++j) {
      if (u64_to_unit(splitmix64_next(state)) < p) {
        word[j >> 6] |= std::uint64_t(1) << (j & 63);
        syn ^= pred.col_syndrome[std::size_t(j)];
      }
    }
    if (syn == 0) {
      ++acc;
      if (!pred.in_hz(word)) ++log;
    }
  };

  std::uint64_t accepted = 0, logical = 0;
  if (pol.mode == Exec::serial) {
    for (std::uint64_t i = 0; i < samples; ++i)
      run_one(i, accepted, logical);
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : accepted, logical) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < std::int64_t(samples); ++i)
      run_one(std::uint64_t(i), accepted, logical);
  }

  McReport r;
  r.code = c.label;
  r.p = p;
  r.samples = samples;
  r.seed = seed;
  r.accepted = accepted;
  r.logical = logical;
  r.p_accept = double(accepted) / double(samples);
  r.p_undetected_logical = double(logical) / double(samples);
  r.conditional_infidelity =
      accepted > 0 ? double(logical) / double(accepted) : 0.0;
  r.accept_ci = wilson(accepted, samples);
  r.conditional_ci = wilson(logical, accepted);
  return r;
}

std::vector<FactorySpec> factory_catalog(ExecPolicy pol) {
  std::vector<FactorySpec> out;

  CssCode small = puncture_code(qrm_code({4, 1, 1}), 0);
  WeightCensus cs = punctured_min_logicals(small, pol);
  out.push_back({"small-unfolded", 15, "T", *cs.d, cs.count});

  CssCode q301 = qrm_code({3, 0, 1});
  WeightCensus c301 = nontrivial_logical_census(q301, pol);
  out.push_back({"qrm301", 8, "CCZ", *c301.d, c301.count});

  auto [trivial, nontrivial] = classify_big_unfolded_w4(pol);
  (void)trivial;
  out.push_back({"big-unfolded", 64, "CCZ", 4, nontrivial});

  // Z logicals of the 15-qubit-payload code are the weight-4 words of
  // the Z normalizer; the Z stabilizers only start at weight 8, so all
  // of them are nontrivial.
  WeightCensus stab = min_weight_words({6, 3}, pol);
  if (*stab.d <= 4)
    throw std::logic_error("factory_catalog: stabilizer weight sanity check");
  WeightCensus rubik = min_weight_words({6, 4}, pol);
  out.push_back({"rubik", 64, "15 CCZ", *rubik.d, rubik.count});

  CssCode p722 = puncture_code(qrm_code({7, 2, 2}), 0);
  WeightCensus c722 = punctured_min_logicals(p722, pol);
  out.push_back({"qrm722-punctured", 127, "T", *c722.d, c722.count});

  return out;
}

std::string rate_report_to_json(const RateReport& r) {
  nlohmann::json j;
  j["code"] = r.code;
  j["p"] = r.p;
  j["w_max"] = r.w_max;
  j["p_accept"] = r.p_accept;
  j["p_undetected_logical"] = r.p_undetected_logical;
  j["conditional_infidelity"] = r.conditional_infidelity;
  j["truncation_bound"] = r.truncation_bound;
  j["accepted_by_weight"] = r.accepted_by_weight;
  j["logical_by_weight"] = r.logical_by_weight;
  return j.dump(2);
}

std::string mc_report_to_json(const McReport& r) {
  nlohmann::json j;
  j["code"] = r.code;
  j["p"] = r.p;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["accepted"] = r.accepted;
  j["logical"] = r.logical;
  j["p_accept"] = r.p_accept;
  j["p_undetected_logical"] = r.p_undetected_logical;
  j["conditional_infidelity"] = r.conditional_infidelity;
  j["accept_ci"] = {r.accept_ci.lo, r.accept_ci.hi};
  j["conditional_ci"] = {r.conditional_ci.lo, r.conditional_ci.hi};
  return j.dump(2);
}

}  // namespace qrmcube
