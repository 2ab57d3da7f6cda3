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

#include "dobsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dobsim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view value, int line, std::string_view key) {
  const std::string tok{trim(value)};
  double v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ConfigError(line, "bad number for '" + std::string(key) + "': " + tok);
  }
  return v;
}

// Plain numbers are m/s; "km/h" and "m/s" suffixes convert.
double parse_speed(std::string_view value, int line, std::string_view key) {
  std::string_view v = trim(value);
  double factor = 1.0;
  if (v.ends_with("km/h")) {
    factor = 1.0 / 3.6;
    v = trim(v.substr(0, v.size() - 4));
  } else if (v.ends_with("m/s")) {
    v = trim(v.substr(0, v.size() - 3));
  }
  return factor * parse_number(v, line, key);
}

int parse_int(std::string_view value, int line, std::string_view key) {
  const std::string tok{trim(value)};
  int v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ConfigError(line, "bad integer for '" + std::string(key) + "': " + tok);
  }
  return v;
}

void set_key(Scenario& sc, std::string_view section, std::string_view key,
             std::string_view value, int line) {
  auto num = [&] { return parse_number(value, line, key); };
  auto unknown = [&]() -> ConfigError {
    return ConfigError(line, "unknown key '" + std::string(key) + "' in [" +
                                 std::string(section) + "]");
  };

  if (section == "vehicle") {
    if (key == "m") sc.vehicle.m = num();
    else if (key == "mu") sc.vehicle.mu = num();
    else if (key == "V") sc.vehicle.V = parse_speed(value, line, key);
    else if (key == "J") sc.vehicle.J = num();
    else if (key == "Cf") sc.vehicle.Cf = num();
    else if (key == "Cr") sc.vehicle.Cr = num();
    else if (key == "lf") sc.vehicle.lf = num();
    else if (key == "lr") sc.vehicle.lr = num();
    else if (key == "ls") sc.vehicle.ls = num();
    else if (key == "l_wind") sc.vehicle.l_wind = num();
    else if (key == "corner") {
      const std::string v{trim(value)};
      if (v.size() != 1 || v[0] < 'a' || v[0] > 'd') {
        throw ConfigError(line, "corner must be one of a, b, c, d");
      }
      sc.corner_label = v[0];
    } else {
      throw unknown();
    }
  } else if (section == "path") {
    if (key == "type") {
      const std::string v{trim(value)};
      if (v == "ellipse") sc.path_kind = PathKind::ellipse;
      else if (v == "straight") sc.path_kind = PathKind::straight;
      else throw ConfigError(line, "path type must be ellipse or straight");
    } else if (key == "semi_major") sc.semi_major = num();
    else if (key == "semi_minor") sc.semi_minor = num();
    else throw unknown();
  } else if (section == "wind") {
    if (key == "magnitude") sc.wind.magnitude = num();
    else if (key == "on_time") sc.wind.on_time = num();
    else if (key == "off_time") sc.wind.off_time = num();
    else throw unknown();
  } else if (section == "controller") {
    if (key == "kp") sc.gains.kp = num();
    else if (key == "kd") sc.gains.kd = num();
    else if (key == "derivative") {
      const std::string v{trim(value)};
      if (v == "backward") sc.pd_form = DerivativeForm::backward;
      else if (v == "forward") sc.pd_form = DerivativeForm::forward;
      else if (v == "trapezoidal") sc.pd_form = DerivativeForm::trapezoidal;
      else throw ConfigError(line, "derivative must be backward, forward or trapezoidal");
    } else {
      throw unknown();
    }
  } else if (section == "compensation") {
    if (key == "type") {
      const std::string v{trim(value)};
      if (v == "none") sc.compensation = Compensation::none;
      else if (v == "dob") sc.compensation = Compensation::dob;
      else if (v == "cdob") sc.compensation = Compensation::cdob;
      else throw ConfigError(line, "compensation type must be none, dob or cdob");
    } else if (key == "delay_samples") {
      const int n = parse_int(value, line, key);
      if (n < 0) throw ConfigError(line, "delay_samples must be >= 0");
      sc.delay_samples = n;
    } else {
      throw unknown();
    }
  } else if (section == "run") {
    if (key == "duration") sc.duration = num();
    else if (key == "Ts") sc.ts = num();
    else if (key == "y0") sc.y0 = num();
    else if (key == "settle_skip") sc.settle_skip = num();
    else throw unknown();
  } else {
    throw ConfigError(line, "unknown section [" + std::string(section) + "]");
  }
}

}  // namespace

Scenario parse_scenario_text(std::string_view text) {
  Scenario sc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string section;
  int line_no = 0;
  bool saw_section = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line{raw};
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError(line_no, "malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      saw_section = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected key = value");
    }
    if (section.empty()) {
      throw ConfigError(line_no, "key outside of any section");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(line_no, "expected key = value");
    }
    set_key(sc, section, key, value, line_no);
  }
  if (!saw_section) {
    throw ConfigError(0, "empty scenario: no sections found");
  }
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

void apply_override(Scenario& sc, std::string_view key, std::string_view value) {
  const auto dot = key.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == key.size()) {
    throw ConfigError(0, "override key must look like section.key");
  }
  set_key(sc, trim(key.substr(0, dot)), trim(key.substr(dot + 1)), value, 0);
}

}  // namespace dobsim
