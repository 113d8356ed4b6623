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

#include "qrmcube/distance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace qrmcube {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Cube-sized indicator held in at most two machine words (m <= 7).
struct Wide {
  std::array<std::uint64_t, 2> w{0, 0};
  void set(std::uint32_t bit) { w[bit >> 6] |= std::uint64_t(1) << (bit & 63); }
  int weight() const {
    return std::popcount(w[0]) + std::popcount(w[1]);
  }
};

int parity_and(const Wide& a, const Wide& b) {
  return (std::popcount(a.w[0] & b.w[0]) + std::popcount(a.w[1] & b.w[1])) & 1;
}

std::vector<Wide> widen_rows(const F2Matrix& m) {
  if (m.ncols > 128)
    throw std::invalid_argument("distance kernels support n <= 128");
  std::vector<Wide> out;
  out.reserve(m.nrows());
  for (const BitVec& r : m.rows) {
    Wide w;
    auto words = r.words();
    for (std::size_t i = 0; i < words.size(); ++i) w.w[i] = words[i];
    out.push_back(w);
  }
  return out;
}

// Echelon data for fast membership tests on <=128-column vectors.
struct WideEchelon {
  std::vector<Wide> rows;
  std::vector<int> pivots;

  explicit WideEchelon(const F2Matrix& m) {
    EchelonForm e(m);
    rows = widen_rows(F2Matrix{m.ncols, e.rows()});
    for (std::size_t p : e.pivots()) pivots.push_back(int(p));
  }

  bool contains(Wide v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      int p = pivots[k];
      if ((v.w[p >> 6] >> (p & 63)) & 1) {
        v.w[0] ^= rows[k].w[0];
        v.w[1] ^= rows[k].w[1];
      }
    }
    return (v.w[0] | v.w[1]) == 0;
  }
};

std::vector<std::uint32_t> pivot_sets(int m, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << m); ++s)
    if (std::popcount(s) == k) out.push_back(s);
  if (k == 0) out.assign(1, 0);
  return out;
}

// All reduced-echelon bases with the given pivot columns. Free entries
// sit at non-pivot columns to the right of each pivot; they are filled
// from an integer counter in (row, column) order.
template <class Fn>
void for_each_rref(int m, std::uint32_t pivots_mask, Fn&& fn) {
  std::vector<int> pivots;
  for (int j = 0; j < m; ++j)
    if ((pivots_mask >> j) & 1) pivots.push_back(j);
  int k = int(pivots.size());
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < k; ++i)
    for (int j = pivots[i] + 1; j < m; ++j)
      if (!((pivots_mask >> j) & 1)) slots.push_back({i, j});
  std::vector<std::uint32_t> rows(k);
  std::uint64_t fills = std::uint64_t(1) << slots.size();
  for (std::uint64_t f = 0; f < fills; ++f) {
    for (int i = 0; i < k; ++i) rows[i] = std::uint32_t(1) << pivots[i];
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((f >> s) & 1)
        rows[slots[s].first] |= std::uint32_t(1) << slots[s].second;
    fn(rows);
  }
}

Wide span_indicator(const std::vector<std::uint32_t>& basis,
                    std::uint32_t offset) {
  Wide ind;
  std::uint32_t k = std::uint32_t(basis.size());
  std::uint32_t v = offset;
  ind.set(v);
  for (std::uint64_t j = 1; j < (std::uint64_t(1) << k); ++j) {
    v ^= basis[std::countr_zero(j)];
    ind.set(v);
  }
  return ind;
}

// Deterministic merge of per-chunk accumulators, independent of thread
// count: chunks are merged in index order.
struct MinCount {
  int best = -1;  // -1 = nothing seen
  std::uint64_t count = 0;

  void add(int w, std::uint64_t c = 1) {
    if (best < 0 || w < best) {
      best = w;
      count = c;
    } else if (w == best) {
      count += c;
    }
  }
  void merge(const MinCount& o) {
    if (o.best >= 0) add(o.best, o.count);
  }
};

}  // namespace

BitVec AffineSubspace::indicator() const {
  BitVec v(std::size_t(1) << m);
  for (std::uint32_t x : members()) v.set(x);
  return v;
}

std::vector<std::uint32_t> AffineSubspace::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t(1) << basis.size());
  std::uint32_t v = offset;
  out.push_back(v);
  for (std::uint64_t j = 1; j < (std::uint64_t(1) << basis.size()); ++j) {
    v ^= basis[std::countr_zero(j)];
    out.push_back(v);
  }
  return out;
}

void for_each_affine(int m, int k,
                     const std::function<void(const AffineSubspace&)>& fn) {
  if (m < 0 || m > 7 || k < 0 || k > m)
    throw std::invalid_argument("for_each_affine: need 0 <= k <= m <= 7");
  std::uint32_t all = (std::uint32_t(1) << m) - 1;
  for (std::uint32_t pm : pivot_sets(m, k)) {
    std::uint32_t nonpivot = all & ~pm;
    for_each_rref(m, pm, [&](const std::vector<std::uint32_t>& rows) {
      AffineSubspace s;
      s.m = m;
      s.basis = rows;
      std::uint32_t o = 0;
      while (true) {
        s.offset = o;
        fn(s);
        if (o == nonpivot) break;
        o = (o - nonpivot) & nonpivot;
      }
    });
  }
}

std::uint64_t affine_count(int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("affine_count");
  using u128 = unsigned __int128;
  u128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (u128(1) << (m - i)) - 1;
    den *= (u128(1) << (k - i)) - 1;
  }
  u128 res = (num / den) << (m - k);
  if (res > ~std::uint64_t(0)) throw std::overflow_error("affine_count");
  return std::uint64_t(res);
}

std::uint64_t closed_form_count(int m, int r) {
  if (r < 0 || r > m) throw std::invalid_argument("closed_form_count");
  using u128 = unsigned __int128;
  u128 num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= (u128(1) << (m - i)) - 1;
    den *= (u128(1) << (r - i)) - 1;
  }
  u128 res = (num / den) << r;
  if (res > ~std::uint64_t(0)) throw std::overflow_error("closed_form_count");
  return std::uint64_t(res);
}

WeightCensus min_weight_words(RmParams p, ExecPolicy pol) {
  auto t0 = Clock::now();
  if (p.m > 7) throw std::invalid_argument("min_weight_words: m <= 7");
  int k = p.m - p.r;
  F2Matrix dual(std::size_t(1) << p.m);
  if (p.m - p.r - 1 >= 0)
    dual = F2Matrix{dual.ncols,
                    EchelonForm(rm_generators({p.m, p.m - p.r - 1})).rows()};
  std::vector<Wide> dual_rows = widen_rows(dual);

  auto check_and_count = [&](const std::vector<std::uint32_t>& basis,
                             std::uint32_t offset) -> std::uint64_t {
    Wide ind = span_indicator(basis, offset);
    for (const Wide& d : dual_rows)
      if (parity_and(ind, d))
        throw std::logic_error(
            "min_weight_words: enumerated subspace is not a codeword");
    return 1;
  };

  std::uint64_t total = 0;
  std::uint32_t all = (std::uint32_t(1) << p.m) - 1;
  std::vector<std::uint32_t> psets = pivot_sets(p.m, k);
  if (pol.mode == Exec::serial) {
    for_each_affine(p.m, k, [&](const AffineSubspace& s) {
      total += check_and_count(s.basis, s.offset);
    });
  } else {
    std::vector<std::uint64_t> per(psets.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < std::int64_t(psets.size()); ++i) {
      std::uint64_t local = 0;
      std::uint32_t nonpivot = all & ~psets[i];
      for_each_rref(p.m, psets[i], [&](const std::vector<std::uint32_t>& rows) {
        std::uint32_t o = 0;
        while (true) {
          local += check_and_count(rows, o);
          if (o == nonpivot) break;
          o = (o - nonpivot) & nonpivot;
        }
      });
      per[std::size_t(i)] = local;
    }
    for (std::uint64_t c : per) total += c;
  }

  WeightCensus out;
  out.code = "rm" + std::to_string(p.m) + "_" + std::to_string(p.r);
  out.d = 1 << k;
  out.count = total;
  out.method = "affine-enumeration";
  out.runtime_ms = ms_since(t0);
  return out;
}

namespace {

// Walks all nonzero combinations of the given rows in binary-reflected
// Gray order, one XOR per step, merging per-chunk results in order.
MinCount walk_span_census(const std::vector<Wide>& rows, ExecPolicy pol) {
  int r = int(rows.size());
  std::uint64_t total = std::uint64_t(1) << r;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    MinCount acc;
    Wide cur;
    std::uint64_t g = lo ^ (lo >> 1);
    for (int b = 0; b < r; ++b)
      if ((g >> b) & 1) {
        cur.w[0] ^= rows[b].w[0];
        cur.w[1] ^= rows[b].w[1];
      }
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i != lo) {
        int b = std::countr_zero(i);
        cur.w[0] ^= rows[b].w[0];
        cur.w[1] ^= rows[b].w[1];
      }
      if (i != 0) acc.add(cur.weight());
    }
    return acc;
  };
  if (pol.mode == Exec::serial || total < 4096) return scan(0, total);

  int nchunks = 256;
  std::uint64_t chunk = (total + nchunks - 1) / nchunks;
  std::vector<MinCount> per{std::size_t(nchunks)};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
  for (int c = 0; c < nchunks; ++c) {
    std::uint64_t lo = std::uint64_t(c) * chunk;
    std::uint64_t hi = std::min(total, lo + chunk);
    if (lo < hi) per[std::size_t(c)] = scan(lo, hi);
  }
  MinCount acc;
  for (const MinCount& p : per) acc.merge(p);
  return acc;
}

}  // namespace

WeightCensus brute_force_census(const F2Matrix& m, ExecPolicy pol) {
  auto t0 = Clock::now();
  EchelonForm e(m);
  if (e.rank() > 26)
    throw budget_error(
        "brute_force_census: rank " + std::to_string(e.rank()) +
        " exceeds the enumeration budget (2^26 codewords); refusing");
  WeightCensus out;
  out.method = "brute-force";
  if (e.rank() == 0) {
    out.runtime_ms = ms_since(t0);
    return out;  // no nonzero codeword; d stays empty
  }
  std::vector<Wide> rows = widen_rows(F2Matrix{m.ncols, e.rows()});
  MinCount acc = walk_span_census(rows, pol);
  out.d = acc.best;
  out.count = acc.count;
  out.runtime_ms = ms_since(t0);
  return out;
}

WeightCensus nontrivial_logical_census(const CssCode& c, ExecPolicy pol) {
  auto t0 = Clock::now();
  F2Matrix normalizer = kernel_basis(c.hx);
  if (normalizer.nrows() > 26)
    throw budget_error("nontrivial_logical_census: normalizer dimension " +
                       std::to_string(normalizer.nrows()) +
                       " exceeds the 2^26 budget; refusing");
  WideEchelon stab(c.hz);
  std::vector<Wide> rows = widen_rows(normalizer);
  int r = int(rows.size());
  std::uint64_t total = std::uint64_t(1) << r;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    MinCount acc;
    Wide cur;
    std::uint64_t g = lo ^ (lo >> 1);
    for (int b = 0; b < r; ++b)
      if ((g >> b) & 1) {
        cur.w[0] ^= rows[b].w[0];
        cur.w[1] ^= rows[b].w[1];
      }
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i != lo) {
        int b = std::countr_zero(i);
        cur.w[0] ^= rows[b].w[0];
        cur.w[1] ^= rows[b].w[1];
      }
      if (i != 0 && !stab.contains(cur)) acc.add(cur.weight());
    }
    return acc;
  };
  MinCount acc;
  if (pol.mode == Exec::serial || total < 4096) {
    acc = scan(0, total);
  } else {
    int nchunks = 64;
    std::uint64_t chunk = (total + nchunks - 1) / nchunks;
    std::vector<MinCount> per{std::size_t(nchunks)};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
    for (int ch = 0; ch < nchunks; ++ch) {
      std::uint64_t lo = std::uint64_t(ch) * chunk;
      std::uint64_t hi = std::min(total, lo + chunk);
      if (lo < hi) per[std::size_t(ch)] = scan(lo, hi);
    }
    for (const MinCount& p : per) acc.merge(p);
  }
  WeightCensus out;
  out.code = c.label;
  if (acc.best >= 0) {
    out.d = acc.best;
    out.count = acc.count;
  }
  out.method = "brute-force";
  out.runtime_ms = ms_since(t0);
  return out;
}

WeightCensus punctured_min_logicals(const CssCode& punctured, ExecPolicy pol) {
  auto t0 = Clock::now();
  if (!punctured.punctured_from)
    throw std::invalid_argument(
        "punctured_min_logicals: code was not produced by puncture_code");
  const PunctureInfo& info = *punctured.punctured_from;
  int m = info.parent.m;
  int k = info.parent.r + 1;  // parent Z stabilizers are RM_m(m-r-1)
  std::uint32_t pos = std::uint32_t(info.pos);

  WideEchelon hx_ech(punctured.hx);
  WideEchelon hz_ech(punctured.hz);

  // Parent minimum-weight words through `pos` are pos + L for the
  // dimension-k linear subspaces L; dropping `pos` leaves a candidate
  // logical of weight 2^k - 1.
  auto check_one = [&](const std::vector<std::uint32_t>& basis) {
    Wide ind;
    std::uint32_t v = pos;
    for (std::uint64_t j = 0; j < (std::uint64_t(1) << k); ++j) {
      if (j) v = pos ^ [&] {
        std::uint32_t x = 0;
        for (int b = 0; b < k; ++b)
          if ((j >> b) & 1) x ^= basis[std::size_t(b)];
        return x;
      }();
      if (v != pos) {
        std::uint32_t col = v > pos ? v - 1 : v;
        ind.set(col);
      }
    }
    for (const Wide& row : hx_ech.rows)
      if (parity_and(ind, row))
        throw std::logic_error(
            "punctured_min_logicals: candidate fails the X-stabilizer "
            "commutation check");
    if (hz_ech.contains(ind))
      throw std::logic_error(
          "punctured_min_logicals: candidate is a stabilizer");
    return std::uint64_t(1);
  };

  std::vector<std::uint32_t> psets = pivot_sets(m, k);
  std::uint64_t total = 0;
  if (pol.mode == Exec::serial) {
    for (std::uint32_t pm : psets)
      for_each_rref(m, pm, [&](const std::vector<std::uint32_t>& rows) {
        total += check_one(rows);
      });
  } else {
    std::vector<std::uint64_t> per(psets.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < std::int64_t(psets.size()); ++i) {
      std::uint64_t local = 0;
      for_each_rref(m, psets[i], [&](const std::vector<std::uint32_t>& rows) {
        local += check_one(rows);
      });
      per[std::size_t(i)] = local;
    }
    for (std::uint64_t c : per) total += c;
  }

  WeightCensus out;
  out.code = punctured.label;
  out.d = (1 << k) - 1;
  out.count = total;
  out.method = "affine-enumeration";
  out.runtime_ms = ms_since(t0);
  return out;
}

std::pair<std::uint64_t, std::uint64_t> classify_big_unfolded_w4(
    ExecPolicy pol) {
  CssCode big = big_unfolded();
  WideEchelon hz_ech(big.hz);
  std::vector<Wide> hx_rows =
      widen_rows(F2Matrix{64, EchelonForm(big.hx).rows()});

  std::uint32_t all = 63;
  auto classify = [&](const std::vector<std::uint32_t>& basis,
                      std::uint32_t offset) {
    Wide ind = span_indicator(basis, offset);
    for (const Wide& row : hx_rows)
      if (parity_and(ind, row))
        throw std::logic_error(
            "classify_big_unfolded_w4: weight-4 element outside the Z "
            "normalizer");
    return hz_ech.contains(ind);
  };

  std::uint64_t trivial = 0, nontrivial = 0;
  std::vector<std::uint32_t> psets = pivot_sets(6, 2);
  if (pol.mode == Exec::serial) {
    for_each_affine(6, 2, [&](const AffineSubspace& s) {
      (classify(s.basis, s.offset) ? trivial : nontrivial) += 1;
    });
  } else {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> per(psets.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(pol.threads > 0 ? pol.threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < std::int64_t(psets.size()); ++i) {
      std::pair<std::uint64_t, std::uint64_t> local{0, 0};
      std::uint32_t nonpivot = all & ~psets[i];
      for_each_rref(6, psets[i], [&](const std::vector<std::uint32_t>& rows) {
        std::uint32_t o = 0;
        while (true) {
          (classify(rows, o) ? local.first : local.second) += 1;
          if (o == nonpivot) break;
          o = (o - nonpivot) & nonpivot;
        }
      });
      per[std::size_t(i)] = local;
    }
    for (auto& p : per) {
      trivial += p.first;
      nontrivial += p.second;
    }
  }
  if (trivial + nontrivial != 10416)
    throw std::logic_error(
        "classify_big_unfolded_w4: expected 10416 weight-4 elements");
  return {trivial, nontrivial};
}

std::string census_to_json(const WeightCensus& c) {
  nlohmann::json j;
  j["code"] = c.code;
  if (c.d)
    j["d"] = *c.d;
  else
    j["d"] = nullptr;
  j["count"] = c.count;
  j["method"] = c.method;
  j["runtime_ms"] = c.runtime_ms;
  return j.dump(2);
}

}  // namespace qrmcube
