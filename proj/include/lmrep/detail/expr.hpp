/*
   Copyright 2026 The lmrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "lmrep/ring.hpp"

namespace lmrep::detail {

/// Parses an arithmetic expression (+, -, *, ^, parentheses, integer literals,
/// the base-ring variable and optionally one main variable `mv`) into a dense
/// coefficient vector in `mv` over the base ring. With mv empty only base-ring
/// constants are accepted and the result has size 1.
std::vector<RingElem> parse_expr_poly(const RingSpec& spec, const std::string& mv,
                                      const std::string& text);

}   // namespace lmrep::detail
