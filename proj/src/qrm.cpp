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

#include "qrmcube/qrm.hpp"

#include <stdexcept>

#include "json.hpp"
#include "qrmcube/bases.hpp"

namespace qrmcube {

namespace {
void validate_rm(RmParams p) {
  if (p.m < 0 || p.m > 16)
    throw std::invalid_argument("rm: m out of range");
  if (p.r < 0 || p.r > p.m)
    throw std::invalid_argument("rm: need 0 <= r <= m");
}
}  // namespace

CssCode make_css(std::string label, F2Matrix hx, F2Matrix hz) {
  if (hx.ncols != hz.ncols)
    throw dimension_error("make_css: hx/hz column mismatch");
  for (const BitVec& x : hx.rows)
    for (const BitVec& z : hz.rows)
      if (inner(x, z))
        throw std::invalid_argument("make_css: stabilizers do not commute");
  CssCode c;
  c.label = std::move(label);
  c.n = int(hx.ncols);
  int k = c.n - int(rank(hx)) - int(rank(hz));
  if (k < 0) throw std::invalid_argument("make_css: negative k");
  c.hx = std::move(hx);
  c.hz = std::move(hz);
  c.k = k;
  return c;
}

F2Matrix rm_generators(RmParams p) {
  validate_rm(p);
  F2Matrix out(std::size_t(1) << p.m);
  for (const Subcube& s : enumerate_subcubes(p.m, p.m - p.r))
    out.push_row(subcube_indicator(s));
  return out;
}

F2Matrix monomial_generators(RmParams p) {
  validate_rm(p);
  std::size_t n = std::size_t(1) << p.m;
  F2Matrix out(n);
  std::uint32_t all = (std::uint32_t(1) << p.m) - 1;
  for (int deg = 0; deg <= p.r; ++deg) {
    for (std::uint32_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != deg) continue;
      BitVec row(n);
      for (std::uint32_t v = 0; v < n; ++v)
        if ((v & s) == s) row.set(v);
      out.push_row(std::move(row));
    }
  }
  return out;
}

F2Matrix plotkin_generators(RmParams p) {
  validate_rm(p);
  std::size_t n = std::size_t(1) << p.m;
  if (p.r == 0) {
    // Degree 0: the constants, i.e. the all-ones word.
    F2Matrix out(n);
    BitVec ones(n);
    for (std::size_t i = 0; i < n; ++i) ones.set(i);
    out.push_row(std::move(ones));
    return out;
  }
  // (u, u+v) with u of degree <= r and v of degree <= r-1 one cube down;
  // the first half is the x_m = 0 face.
  F2Matrix upper = plotkin_generators({p.m - 1, std::min(p.r, p.m - 1)});
  F2Matrix lower = plotkin_generators({p.m - 1, p.r - 1});
  std::size_t half = n / 2;
  F2Matrix out(n);
  for (const BitVec& u : upper.rows) {
    BitVec row(n);
    for (std::size_t i = 0; i < half; ++i)
      if (u.get(i)) {
        row.set(i);
        row.set(i + half);
      }
    out.push_row(std::move(row));
  }
  for (const BitVec& v : lower.rows) {
    BitVec row(n);
    for (std::size_t i = 0; i < half; ++i)
      if (v.get(i)) row.set(i + half);
    out.push_row(std::move(row));
  }
  return out;
}

std::size_t rm_dimension(RmParams p) {
  validate_rm(p);
  // sum_{i<=r} C(m,i)
  std::size_t total = 0, c = 1;
  for (int i = 0; i <= p.r; ++i) {
    total += c;
    c = c * std::size_t(p.m - i) / std::size_t(i + 1);
  }
  return total;
}

CssCode qrm_code(QrmParams p) {
  if (!(p.m >= 1 && 0 <= p.q && p.q <= p.r && p.r <= p.m))
    throw std::invalid_argument("qrm: need 1 <= m and 0 <= q <= r <= m");
  F2Matrix hx = rm_generators({p.m, p.q});
  F2Matrix hz(std::size_t(1) << p.m);
  if (p.m - p.r - 1 >= 0) hz = rm_generators({p.m, p.m - p.r - 1});
  std::string label = "qrm" + std::to_string(p.m) + std::to_string(p.q) +
                      std::to_string(p.r);
  CssCode c = make_css(label, std::move(hx), std::move(hz));
  c.qrm_origin = p;
  return c;
}

F2Matrix shorten(const F2Matrix& m, std::size_t pos) {
  if (pos >= m.ncols) throw std::invalid_argument("shorten: pos out of range");
  F2Matrix kept(m.ncols);
  for (const BitVec& r : m.rows)
    if (!r.get(pos)) kept.push_row(r);
  return drop_column(kept, pos);
}

CssCode puncture_code(const CssCode& c, int pos) {
  if (c.k != 0)
    throw std::invalid_argument(
        "puncture does not create a logical qubit: code already has k != 0");
  if (pos < 0 || pos >= c.n)
    throw std::invalid_argument("puncture: pos out of range");
  F2Matrix hx = shorten(c.hx, std::size_t(pos));
  F2Matrix hz = shorten(c.hz, std::size_t(pos));
  if (rank(hx) + 1 != rank(c.hx) || rank(hz) + 1 != rank(c.hz))
    throw std::invalid_argument(
        "puncture does not create a logical qubit: rank must drop by one on "
        "both sides");
  CssCode out = make_css(c.label + "-punctured", std::move(hx), std::move(hz));
  if (c.qrm_origin) out.punctured_from = PunctureInfo{*c.qrm_origin, pos};
  return out;
}

CssCode big_unfolded() {
  F2Matrix hx = rm_generators({6, 1});
  F2Matrix hz(64);
  for (const Subcube& s : basis_big_unfolded().generators)
    hz.push_row(subcube_indicator(s));
  return make_css("big-unfolded", std::move(hx), std::move(hz));
}

F2Matrix z_logical_space(const CssCode& c) { return kernel_basis(c.hx); }

std::string css_to_json(const CssCode& c) {
  nlohmann::json j;
  j["label"] = c.label;
  j["n"] = c.n;
  j["k"] = c.k;
  j["hx"] = nlohmann::json::array();
  for (const BitVec& r : c.hx.rows) j["hx"].push_back(r.str());
  j["hz"] = nlohmann::json::array();
  for (const BitVec& r : c.hz.rows) j["hz"].push_back(r.str());
  return j.dump(2);
}

}  // namespace qrmcube
