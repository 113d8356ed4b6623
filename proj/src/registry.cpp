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

#include "qrmcube/registry.hpp"

#include <map>
#include <stdexcept>

namespace qrmcube {

namespace {

std::string canonical_code(const std::string& label) {
  if (label == "qrm612") return "rubik";
  return label;
}

const std::map<std::string, CssCode>& codes() {
  static const std::map<std::string, CssCode> m = [] {
    std::map<std::string, CssCode> c;
    CssCode q411 = qrm_code({4, 1, 1});
    q411.label = "qrm411";
    c["small-unfolded"] = puncture_code(q411, 0);
    c["small-unfolded"].label = "small-unfolded";
    c["qrm411"] = std::move(q411);
    c["qrm611"] = qrm_code({6, 1, 1});
    c["qrm611"].label = "qrm611";
    c["big-unfolded"] = big_unfolded();
    CssCode q612 = qrm_code({6, 1, 2});
    q612.label = "rubik";
    c["rubik"] = std::move(q612);
    c["qrm722"] = qrm_code({7, 2, 2});
    c["qrm722"].label = "qrm722";
    c["qrm722-punctured"] = puncture_code(c["qrm722"], 0);
    c["qrm722-punctured"].label = "qrm722-punctured";
    c["qrm301"] = qrm_code({3, 0, 1});
    c["qrm301"].label = "qrm301";
    return c;
  }();
  return m;
}

const std::map<std::string, NamedBasis>& bases() {
  static const std::map<std::string, NamedBasis> m = [] {
    std::map<std::string, NamedBasis> b;
    b["small-unfolded"] = basis_small_unfolded();
    b["qrm611"] = basis_qrm611();
    b["big-unfolded"] = basis_big_unfolded();
    b["rubik"] = basis_rubik();
    b["qrm722"] = basis_qrm722();
    return b;
  }();
  return m;
}

}  // namespace

const CssCode& code_by_label(const std::string& label) {
  const auto& m = codes();
  auto it = m.find(canonical_code(label));
  if (it == m.end())
    throw std::invalid_argument("unknown code '" + label + "'");
  return it->second;
}

std::vector<std::string> code_labels() {
  std::vector<std::string> out;
  for (const auto& [k, v] : codes()) out.push_back(k);
  return out;
}

const NamedBasis& basis_by_label(const std::string& label) {
  const auto& m = bases();
  auto it = m.find(label);
  if (it == m.end())
    throw std::invalid_argument("unknown basis '" + label + "'");
  return it->second;
}

std::vector<std::string> basis_labels() {
  std::vector<std::string> out;
  for (const auto& [k, v] : bases()) out.push_back(k);
  return out;
}

const SubcubeCode& logic_view_by_label(const std::string& label) {
  static const std::map<std::string, SubcubeCode> m = [] {
    std::map<std::string, SubcubeCode> v;
    v["rubik"] = subcube_view_qrm612(code_by_label("rubik"));
    v["big-unfolded"] = subcube_view_big_unfolded(code_by_label("big-unfolded"));
    v["qrm611"] = subcube_view_qrm611(code_by_label("qrm611"));
    return v;
  }();
  auto it = m.find(canonical_code(label));
  if (it == m.end())
    throw std::invalid_argument("no logical-action support for code '" +
                                label + "'");
  return it->second;
}

}  // namespace qrmcube
