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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "noonlab/scenarios.hpp"

using namespace noonlab::cli;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

ScenarioConfig make_config(const std::string& scenario) {
    ScenarioConfig config;
    config.scenario = scenario;
    return config;
}

}  // namespace

TEST_CASE("fringe scenario emits a well-formed scan") {
    ScenarioConfig config = make_config("fringe");
    config.parameters["input"] = "noon";
    config.parameters["N"] = "3";
    const ScenarioOutcome outcome = run_scenario(config);
    REQUIRE(outcome.exit_code == 0);
    const auto rows = parse_csv(outcome.output);
    REQUIRE(rows.size() == 362);  // header + 361 points
    CHECK(rows[0] == std::vector<std::string>{"phi_rad", "value", "variance"});

    // three maxima over one full turn (the end point duplicates phi = 0)
    std::vector<double> values;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        values.push_back(std::stod(rows[i][1]));
    }
    int maxima = 0;
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = values[(i + n - 1) % n];
        const double next = values[(i + 1) % n];
        if (values[i] > prev && values[i] >= next) ++maxima;
    }
    CHECK(maxima == 3);
}

TEST_CASE("loss sweep includes the 3 dB row") {
    const ScenarioOutcome outcome = run_scenario(make_config("loss-sweep"));
    REQUIRE(outcome.exit_code == 0);
    const auto rows = parse_csv(outcome.output);
    CHECK(rows[0] == std::vector<std::string>{"gamma", "coherent_contrast",
                                              "noon_contrast"});
    const auto& last = rows.back();
    CHECK(std::stod(last[0]) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(std::stod(last[1]) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::stod(last[2]) == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("herald scenarios report probability and fidelity") {
    SUBCASE("Kerr generator") {
        const ScenarioOutcome outcome = run_scenario(make_config("herald-gc"));
        REQUIRE(outcome.exit_code == 0);
        const auto rows = parse_csv(outcome.output);
        REQUIRE(rows[0] == std::vector<std::string>{"field", "value"});
        double success = -1.0;
        double fidelity = -1.0;
        for (const auto& row : rows) {
            if (row[0] == "success_probability") success = std::stod(row[1]);
            if (row[0] == "fidelity_to_target") fidelity = std::stod(row[1]);
        }
        CHECK(success == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(fidelity == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("heralded linear-optics generator at a fixed angle") {
        ScenarioConfig config = make_config("herald-lkd");
        config.parameters["theta"] = "0.6154797086703873";
        const ScenarioOutcome outcome = run_scenario(config);
        REQUIRE(outcome.exit_code == 0);
        double success = -1.0;
        for (const auto& row : parse_csv(outcome.output)) {
            if (row[0] == "success_probability") success = std::stod(row[1]);
        }
        CHECK(success == doctest::Approx(16.0 / 243.0).epsilon(1e-9));
    }
}

TEST_CASE("limits scenario") {
    ScenarioConfig config = make_config("limits");
    config.parameters["n"] = "9";
    config.parameters["wavelength"] = "1.0";
    const ScenarioOutcome outcome = run_scenario(config);
    REQUIRE(outcome.exit_code == 0);
    const auto rows = parse_csv(outcome.output);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(1.0 / 3.0));
    CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("sensitivity scenario defaults to the mid-fringe point") {
    ScenarioConfig config = make_config("sensitivity");
    config.parameters["input"] = "coherent";
    config.parameters["alpha"] = "2.0";
    const ScenarioOutcome outcome = run_scenario(config);
    REQUIRE(outcome.exit_code == 0);
    const auto rows = parse_csv(outcome.output);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("hom scenario lists output probabilities") {
    const ScenarioOutcome outcome = run_scenario(make_config("hom"));
    REQUIRE(outcome.exit_code == 0);
    const auto rows = parse_csv(outcome.output);
    REQUIRE(rows.size() >= 3);
    double p20 = 0.0;
    double p11 = 0.0;
    for (const auto& row : rows) {
        if (row[0] == "2_0") p20 = std::stod(row[1]);
        if (row[0] == "1_1") p11 = std::stod(row[1]);
    }
    CHECK(p20 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p11 == 0.0);
}

TEST_CASE("opa scenario produces a non-increasing visibility column") {
    ScenarioConfig config = make_config("opa-visibility");
    config.phi_min = 0.1;
    config.phi_max = 0.6;
    config.steps = 4;
    config.parameters["phi_steps"] = "61";
    const ScenarioOutcome outcome = run_scenario(config);
    REQUIRE(outcome.exit_code == 0);
    const auto rows = parse_csv(outcome.output);
    REQUIRE(rows.size() == 5);
    double prev = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(rows[i][1]);
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("json format mirrors the report fields") {
    SUBCASE("fringe") {
        ScenarioConfig config = make_config("fringe");
        config.output_format = "json";
        config.steps = 5;
        const ScenarioOutcome outcome = run_scenario(config);
        REQUIRE(outcome.exit_code == 0);
        const auto j = nlohmann::json::parse(outcome.output);
        CHECK(j.contains("phis"));
        CHECK(j.contains("values"));
        CHECK(j.contains("variances"));
        CHECK(j.contains("observable_tag"));
        CHECK(j["phis"].size() == 5);
    }
    SUBCASE("generation result") {
        ScenarioConfig config = make_config("herald-gc");
        config.output_format = "json";
        const ScenarioOutcome outcome = run_scenario(config);
        REQUIRE(outcome.exit_code == 0);
        const auto j = nlohmann::json::parse(outcome.output);
        CHECK(j.contains("success_probability"));
        CHECK(j.contains("fidelity_to_target"));
        CHECK(j["output"].contains("mode_count"));
        CHECK(j["output"].contains("terms"));
    }
    SUBCASE("sensitivity") {
        ScenarioConfig config = make_config("sensitivity");
        config.output_format = "json";
        const ScenarioOutcome outcome = run_scenario(config);
        REQUIRE(outcome.exit_code == 0);
        const auto j = nlohmann::json::parse(outcome.output);
        for (const char* key : {"delta_phi", "at_phi", "slope", "noise"}) {
            CHECK(j.contains(key));
        }
    }
}

TEST_CASE("identical configs give byte-identical output") {
    for (const std::string& name :
         {std::string("fringe"), std::string("hom"), std::string("herald-gc"),
          std::string("loss-sweep"), std::string("sensitivity"),
          std::string("limits")}) {
        const ScenarioConfig config = make_config(name);
        const ScenarioOutcome first = run_scenario(config);
        const ScenarioOutcome second = run_scenario(config);
        REQUIRE(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("configuration errors exit with code 2") {
    SUBCASE("unknown scenario names the valid ones") {
        const ScenarioOutcome outcome = run_scenario(make_config("warp"));
        CHECK(outcome.exit_code == 2);
        for (const auto& name : scenario_names()) {
            CHECK(outcome.message.find(name) != std::string::npos);
        }
    }
    SUBCASE("bad grid") {
        ScenarioConfig config = make_config("fringe");
        config.steps = 1;
        CHECK(run_scenario(config).exit_code == 2);
        config.steps = 10;
        config.phi_min = 2.0;
        config.phi_max = 1.0;
        CHECK(run_scenario(config).exit_code == 2);
    }
    SUBCASE("malformed parameter") {
        ScenarioConfig config = make_config("fringe");
        config.parameters["gamma"] = "soup";
        CHECK(run_scenario(config).exit_code == 2);
    }
    SUBCASE("bad format") {
        ScenarioConfig config = make_config("limits");
        config.output_format = "yaml";
        CHECK(run_scenario(config).exit_code == 2);
    }
}

TEST_CASE("computation errors exit with code 1") {
    ScenarioConfig config = make_config("fringe");
    config.parameters["input"] = "coherent";
    config.parameters["alpha"] = "4.5";  // exceeds the cap headroom
    const ScenarioOutcome outcome = run_scenario(config);
    CHECK(outcome.exit_code == 1);
    CHECK(!outcome.message.empty());
}

TEST_CASE("photon cap override via the environment") {
    ScenarioConfig config = make_config("fringe");
    config.parameters["N"] = "5";
    REQUIRE(run_scenario(config).exit_code == 0);

    setenv("NOON_LAB_NCAP", "4", 1);
    CHECK(run_scenario(config).exit_code == 1);  // N = 5 no longer fits
    setenv("NOON_LAB_NCAP", "banana", 1);
    CHECK(run_scenario(config).exit_code == 2);
    unsetenv("NOON_LAB_NCAP");
    CHECK(run_scenario(config).exit_code == 0);
}

TEST_CASE("config files load and flags override") {
    const std::string path = "noonlab_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"scenario": "limits", "parameters": {"n": 9,)"
            << R"( "wavelength": "1.0"}, "output_format": "csv"})";
    }
    ScenarioConfig config = load_config_file(path);
    CHECK(config.scenario == "limits");
    CHECK(config.parameters.at("n") == "9");

    apply_override(config, "n", "16");
    apply_override(config, "format", "json");
    const ScenarioOutcome outcome = run_scenario(config);
    REQUIRE(outcome.exit_code == 0);
    const auto j = nlohmann::json::parse(outcome.output);
    CHECK(j["snl_phi"].get<double>() == doctest::Approx(0.25));
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_config_file("does_not_exist.json"), config_error);
}
