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

#include <stdexcept>
#include <string>
#include <string_view>

#include "dobsim/scenario.hpp"

namespace dobsim {

/// Scenario file problem with the offending line (0 when not line-bound).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the sectioned key = value scenario format:
///   [vehicle] m mu V J Cf Cr lf lr ls l_wind corner
///   [path] type semi_major semi_minor
///   [wind] magnitude on_time off_time
///   [controller] kp kd derivative
///   [compensation] type delay_samples
///   [run] duration Ts y0 settle_skip
/// '#' starts a comment; speeds accept a km/h or m/s suffix. Unknown
/// sections or keys raise ConfigError with the line number.
Scenario parse_scenario_text(std::string_view text);

/// Reads and parses a scenario file; throws ConfigError (line 0) when the
/// file cannot be read.
Scenario parse_scenario_file(const std::string& path);

/// Applies one "section.key=value" override on top of a parsed scenario.
void apply_override(Scenario& sc, std::string_view key, std::string_view value);

}  // namespace dobsim
