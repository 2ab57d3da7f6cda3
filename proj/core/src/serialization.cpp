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

#include "dobsim/serialization.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dobsim {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token) {
  double v{};
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("transfer function text: bad number '" + token + "'");
  }
  return v;
}

}  // namespace

std::string to_text(const TransferFunction& g) {
  std::string out = g.is_discrete()
                        ? "discrete " + format_double(g.sample_time())
                        : "continuous";
  out += " num:";
  for (double c : g.num().coeffs()) out += " " + format_double(c);
  out += " den:";
  for (double c : g.den().coeffs()) out += " " + format_double(c);
  return out;
}

TransferFunction tf_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument("transfer function text: empty");

  bool discrete = false;
  double ts = 0.0;
  if (tok == "discrete") {
    discrete = true;
    std::string ts_tok;
    if (!(in >> ts_tok)) {
      throw std::invalid_argument("transfer function text: missing sample time");
    }
    ts = parse_double(ts_tok);
  } else if (tok != "continuous") {
    throw std::invalid_argument("transfer function text: expected domain, got '" +
                                tok + "'");
  }

  if (!(in >> tok) || tok != "num:") {
    throw std::invalid_argument("transfer function text: expected 'num:'");
  }
  std::vector<double> num, den;
  bool in_den = false;
  while (in >> tok) {
    if (tok == "den:") {
      if (in_den) throw std::invalid_argument("transfer function text: duplicate 'den:'");
      in_den = true;
      continue;
    }
    (in_den ? den : num).push_back(parse_double(tok));
  }
  if (num.empty() || den.empty()) {
    throw std::invalid_argument("transfer function text: missing coefficients");
  }
  return discrete ? TransferFunction::discrete(Polynomial(std::move(num)),
                                               Polynomial(std::move(den)), ts)
                  : TransferFunction::continuous(Polynomial(std::move(num)),
                                                 Polynomial(std::move(den)));
}

}  // namespace dobsim
