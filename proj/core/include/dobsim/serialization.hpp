// Copyright 2026 The dobsim Authors.
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
#include <string_view>

#include "dobsim/transfer_function.hpp"

namespace dobsim {

/// One-line text form:
///   continuous num: c_n ... c_0 den: d_m ... d_0
///   discrete <Ts> num: c_n ... c_0 den: d_m ... d_0
/// Coefficients highest degree first, full round-trip precision.
std::string to_text(const TransferFunction& g);

/// Parses the one-line form; throws std::invalid_argument with a reason.
TransferFunction tf_from_text(std::string_view text);

}  // namespace dobsim
