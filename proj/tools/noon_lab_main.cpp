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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "noonlab/scenarios.hpp"

int main(int argc, char** argv) {
    CLI::App app{"noon-lab: two-mode interferometry scenario runner"};

    std::string scenario;
    std::string config_path;
    std::string format;
    std::string out_path;
    std::vector<std::string> raw_params;
    double phi_min = 0.0;
    double phi_max = 0.0;
    int steps = 0;

    app.add_option("scenario", scenario,
                   "one of: fringe, hom, herald-gc, herald-lkd, loss-sweep, "
                   "opa-visibility, sensitivity, limits");
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--param", raw_params, "key=value override (repeatable)");
    app.add_option("--format", format, "csv or json");
    app.add_option("--out", out_path, "write the report to a file");
    auto* opt_phi_min = app.add_option("--phi-min", phi_min, "grid start");
    auto* opt_phi_max = app.add_option("--phi-max", phi_max, "grid end");
    auto* opt_steps = app.add_option("--steps", steps, "grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    noonlab::cli::ScenarioConfig config;
    try {
        if (!config_path.empty()) {
            config = noonlab::cli::load_config_file(config_path);
        }
        if (!scenario.empty()) config.scenario = scenario;
        if (!format.empty()) config.output_format = format;
        if (opt_phi_min->count() > 0) config.phi_min = phi_min;
        if (opt_phi_max->count() > 0) config.phi_max = phi_max;
        if (opt_steps->count() > 0) config.steps = steps;
        for (const std::string& kv : raw_params) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) {
                std::cerr << "--param expects key=value, got '" << kv << "'\n";
                return 2;
            }
            noonlab::cli::apply_override(config, kv.substr(0, eq),
                                         kv.substr(eq + 1));
        }
    } catch (const noonlab::cli::config_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const noonlab::cli::ScenarioOutcome outcome =
        noonlab::cli::run_scenario(config);
    if (outcome.exit_code != 0) {
        std::cerr << outcome.message << "\n";
        return outcome.exit_code;
    }
    if (out_path.empty()) {
        std::cout << outcome.output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write to '" << out_path << "'\n";
            return 1;
        }
        out << outcome.output;
    }
    return 0;
}
