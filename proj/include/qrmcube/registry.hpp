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

#include "qrmcube/bases.hpp"
#include "qrmcube/logic.hpp"
#include "qrmcube/qrm.hpp"

namespace qrmcube {

/// Fixed label registry. Codes: small-unfolded, qrm411, qrm611,
/// big-unfolded, rubik (alias qrm612), qrm722, qrm722-punctured, qrm301.
/// Arbitrary parameters go through qrm_code directly.
const CssCode& code_by_label(const std::string& label);
std::vector<std::string> code_labels();

/// Bases: small-unfolded, qrm611, big-unfolded, rubik, qrm722.
const NamedBasis& basis_by_label(const std::string& label);
std::vector<std::string> basis_labels();

/// Subcube view for the codes the conjugation engine supports
/// (qrm612/rubik, big-unfolded, qrm611).
const SubcubeCode& logic_view_by_label(const std::string& label);

}  // namespace qrmcube
