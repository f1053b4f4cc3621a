// Copyright 2026 The noon-lab developers.
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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace noonlab::cli {

/// Invalid user input: unknown scenario, malformed parameter, bad grid.
/// Mapped to exit code 2.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// One scenario request. Scenario-specific knobs travel in `parameters`;
/// values given as strings are parsed on use. Grid fields left unset fall
/// back to per-scenario defaults.
struct ScenarioConfig {
    std::string scenario;
    std::map<std::string, std::string> parameters;
    std::optional<double> phi_min;
    std::optional<double> phi_max;
    std::optional<int> steps;
    std::string output_format = "csv";  // csv | json
};

/// Result of running a scenario. exit_code: 0 success, 2 configuration
/// error, 1 computation error. On success `output` holds the full report;
/// on failure `message` holds a one-line description.
struct ScenarioOutcome {
    int exit_code = 0;
    std::string output;
    std::string message;
};

/// Names accepted by run_scenario, in the order reported to the user.
const std::vector<std::string>& scenario_names();

/// Executes one scenario. Deterministic: identical configs produce
/// byte-identical output. Honors the NOON_LAB_NCAP environment variable as
/// a photon-cap override for the duration of the call.
ScenarioOutcome run_scenario(const ScenarioConfig& config);

/// Loads a config from a JSON file. Missing file or malformed content
/// throws config_error.
ScenarioConfig load_config_file(const std::string& path);

/// Applies `key=value` pairs and format/grid flags on top of a config.
void apply_override(ScenarioConfig& config, const std::string& key,
                    const std::string& value);

}  // namespace noonlab::cli
