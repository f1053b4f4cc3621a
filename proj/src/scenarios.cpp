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

#include "noonlab/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "noonlab/elements.hpp"
#include "noonlab/generation.hpp"
#include "noonlab/interferometry.hpp"
#include "noonlab/loss.hpp"
#include "noonlab/states.hpp"

namespace noonlab::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string occ_label(const OccupationVector& occ) {
    std::string out;
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (i) out += '_';
        out += std::to_string(occ[i]);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw config_error("parameter '" + key + "' expects a number, got '" +
                           text + "'");
    }
}

int parse_int(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw config_error("parameter '" + key + "' expects an integer, got '" +
                           text + "'");
    }
}

class ParamReader {
  public:
    explicit ParamReader(const std::map<std::string, std::string>& params)
        : params_(params) {}

    double number(const std::string& key, double fallback) const {
        auto it = params_.find(key);
        return it == params_.end() ? fallback : parse_double(key, it->second);
    }
    int integer(const std::string& key, int fallback) const {
        auto it = params_.find(key);
        return it == params_.end() ? fallback : parse_int(key, it->second);
    }
    std::string text(const std::string& key, const std::string& fallback) const {
        auto it = params_.find(key);
        return it == params_.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return params_.count(key) > 0; }

  private:
    const std::map<std::string, std::string>& params_;
};

// Restores the photon cap when a scenario that raised it finishes.
class CapGuard {
  public:
    CapGuard() : saved_(global_photon_cap()) {}
    ~CapGuard() { set_global_photon_cap(saved_); }
    CapGuard(const CapGuard&) = delete;
    CapGuard& operator=(const CapGuard&) = delete;

  private:
    int saved_;
};

json state_to_json(const PureState& state) {
    json terms = json::array();
    for (const auto& [occ, amp] : state.terms()) {
        terms.push_back({{"occupation", occ},
                         {"re", amp.real()},
                         {"im", amp.imag()}});
    }
    return json{{"mode_count", state.mode_count()}, {"terms", terms}};
}

std::string render_fringe_csv(const FringeScan& scan) {
    std::string out = "phi_rad,value,variance\n";
    for (std::size_t i = 0; i < scan.phis.size(); ++i) {
        out += fmt12(scan.phis[i]) + ',' + fmt12(scan.values[i]) + ',' +
               fmt12(scan.variances[i]) + '\n';
    }
    return out;
}

std::string render_fringe_json(const FringeScan& scan) {
    const json j{{"observable_tag", scan.observable_tag},
                 {"phis", scan.phis},
                 {"values", scan.values},
                 {"variances", scan.variances}};
    return j.dump(2) + '\n';
}

struct ResolvedGrid {
    double lo;
    double hi;
    int steps;
};

ResolvedGrid resolve_grid(const ScenarioConfig& config, double lo_default,
                          double hi_default, int steps_default) {
    ResolvedGrid g{config.phi_min.value_or(lo_default),
                   config.phi_max.value_or(hi_default),
                   config.steps.value_or(steps_default)};
    if (g.steps < 2) throw config_error("steps must be >= 2");
    if (!(g.lo < g.hi)) throw config_error("grid bounds must satisfy min < max");
    return g;
}

PureState fringe_input(const ParamReader& params, int& n_out,
                       std::string& input_kind) {
    input_kind = params.text("input", "noon");
    if (input_kind == "noon") {
        n_out = params.integer("N", 3);
        return make_noon(n_out);
    }
    if (input_kind == "coherent") {
        n_out = 0;
        CoherentSpec spec;
        spec.alpha = complex{params.number("alpha", 1.0), 0.0};
        return tensor_product(make_coherent(spec), make_fock({0}));
    }
    throw config_error("input must be 'noon' or 'coherent', got '" +
                       input_kind + "'");
}

Observable fringe_observable(const ParamReader& params,
                             const std::string& input_kind, int n) {
    const std::string name = params.text(
        "observable", input_kind == "coherent" ? "difference" : "rate");
    if (name == "difference") return Observable::difference();
    if (name == "rate") return Observable::nphoton_rate(n > 0 ? n : 1);
    if (name == "projector") return Observable::noon_projector(n > 0 ? n : 1);
    throw config_error(
        "observable must be 'rate', 'difference' or 'projector', got '" +
        name + "'");
}

bool resolve_pipeline(const ParamReader& params, const Observable& obs) {
    const std::string name = params.text("pipeline", "auto");
    if (name == "full") return false;
    if (name == "bare") return true;
    if (name == "auto") {
        return obs.kind != Observable::Kind::Difference;
    }
    throw config_error("pipeline must be 'auto', 'full' or 'bare', got '" +
                       name + "'");
}

std::string scenario_fringe(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    const ResolvedGrid grid = resolve_grid(config, 0.0, 2.0 * kPi, 361);
    int n = 0;
    std::string kind;
    const PureState input = fringe_input(params, n, kind);
    const Observable obs = fringe_observable(params, kind, n);
    const bool bare = resolve_pipeline(params, obs);
    const double gamma = params.number("gamma", 0.0);
    if (gamma < 0.0) throw config_error("gamma must be >= 0");
    const FringeScan scan =
        fringe_scan(input, linspace(grid.lo, grid.hi, grid.steps), gamma, obs,
                    bare);
    return config.output_format == "json" ? render_fringe_json(scan)
                                          : render_fringe_csv(scan);
}

std::string scenario_hom(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    const int n_a = params.integer("n_a", 1);
    const int n_b = params.integer("n_b", 1);
    if (n_a < 0 || n_b < 0) throw config_error("photon counts must be >= 0");
    const double theta = params.number("theta", kPi / 4.0);
    const PureState out =
        apply_beamsplitter(make_fock({n_a, n_b}), 0, 1, theta);
    if (config.output_format == "json") {
        json rows = json::array();
        for (const auto& [occ, amp] : out.terms()) {
            rows.push_back(
                {{"occupation", occ}, {"probability", std::norm(amp)}});
        }
        const json j{{"input", OccupationVector{n_a, n_b}},
                     {"theta", theta},
                     {"probabilities", rows}};
        return j.dump(2) + '\n';
    }
    std::string text = "state,probability\n";
    for (const auto& [occ, amp] : out.terms()) {
        text += occ_label(occ) + ',' + fmt12(std::norm(amp)) + '\n';
    }
    return text;
}

std::string render_generation(const ScenarioConfig& config,
                              const GenerationResult& result,
                              const std::vector<std::pair<std::string, double>>&
                                  extra_fields) {
    if (config.output_format == "json") {
        json j{{"success_probability", result.success_probability},
               {"output", state_to_json(result.output)}};
        if (result.fidelity_to_target) {
            j["fidelity_to_target"] = *result.fidelity_to_target;
        }
        for (const auto& [key, value] : extra_fields) j[key] = value;
        return j.dump(2) + '\n';
    }
    std::string text = "field,value\n";
    for (const auto& [key, value] : extra_fields) {
        text += key + ',' + fmt12(value) + '\n';
    }
    text += "success_probability," + fmt12(result.success_probability) + '\n';
    if (result.fidelity_to_target) {
        text += "fidelity_to_target," + fmt12(*result.fidelity_to_target) + '\n';
    }
    for (const auto& [occ, amp] : result.output.terms()) {
        text += "p_" + occ_label(occ) + ',' + fmt12(std::norm(amp)) + '\n';
    }
    return text;
}

std::string scenario_herald_gc(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    const int n = params.integer("N", 2);
    const double chi = params.number("chi", kPi);
    const std::string port_name = params.text("port", "c");
    AncillaPort port;
    if (port_name == "c" || port_name == "C") {
        port = AncillaPort::C;
    } else if (port_name == "d" || port_name == "D") {
        port = AncillaPort::D;
    } else {
        throw config_error("port must be 'c' or 'd', got '" + port_name + "'");
    }
    return render_generation(config, generate_noon_gc(n, chi, port), {});
}

std::string scenario_herald_lkd(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    double theta;
    std::vector<std::pair<std::string, double>> extra;
    if (params.has("theta")) {
        theta = params.number("theta", 0.0);
    } else {
        const std::string objective_name =
            params.text("objective", "probability");
        LkdObjective objective;
        if (objective_name == "probability") {
            objective = LkdObjective::Probability;
        } else if (objective_name == "probability_fidelity") {
            objective = LkdObjective::ProbabilityTimesFidelity;
        } else {
            throw config_error("objective must be 'probability' or "
                               "'probability_fidelity'");
        }
        const OptimizeResult best = optimize_success(
            objective, params.number("theta_min", 0.05),
            params.number("theta_max", kPi / 2.0 - 0.05));
        theta = best.theta_star;
        extra.emplace_back("theta_star", best.theta_star);
    }
    extra.emplace_back("tap_theta", theta);
    return render_generation(config, generate_noon4_lkd(theta), extra);
}

std::string scenario_loss_sweep(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    const int n = params.integer("N", 3);
    const double n_coherent = params.number("n_coherent", 4.0);
    const ResolvedGrid grid =
        resolve_grid(config, params.number("gamma_min", 0.0),
                     params.number("gamma_max", std::log(2.0)), 25);
    const LossSweep sweep = contrast_curves(
        n, n_coherent, linspace(grid.lo, grid.hi, grid.steps));
    if (config.output_format == "json") {
        const json j{{"N", sweep.N},
                     {"gammas", sweep.gammas},
                     {"coherent_contrast", sweep.coherent_contrast},
                     {"noon_contrast", sweep.noon_contrast}};
        return j.dump(2) + '\n';
    }
    std::string text = "gamma,coherent_contrast,noon_contrast\n";
    for (std::size_t i = 0; i < sweep.gammas.size(); ++i) {
        text += fmt12(sweep.gammas[i]) + ',' +
                fmt12(sweep.coherent_contrast[i]) + ',' +
                fmt12(sweep.noon_contrast[i]) + '\n';
    }
    return text;
}

std::string scenario_opa_visibility(const ScenarioConfig& config,
                                    bool cap_pinned) {
    const ParamReader params(config.parameters);
    const ResolvedGrid grid = resolve_grid(config, 0.1, 2.0, 20);
    const int phi_steps = params.integer("phi_steps", 181);
    if (phi_steps < 2) throw config_error("phi_steps must be >= 2");
    const int fixed_cutoff = params.integer("pair_cutoff", 0);
    if (grid.lo <= 0.0) throw config_error("gain grid must be positive");

    const std::vector<double> rs = linspace(grid.lo, grid.hi, grid.steps);
    int max_cutoff = fixed_cutoff;
    if (fixed_cutoff <= 0) {
        max_cutoff = recommended_pair_cutoff(rs.back());
    }
    if (!cap_pinned && 2 * max_cutoff > global_photon_cap()) {
        set_global_photon_cap(2 * max_cutoff);
    }

    const std::vector<double> phis = linspace(0.0, kPi, phi_steps);
    std::vector<double> vis;
    std::vector<int> cutoffs;
    for (double r : rs) {
        OpaSpec spec;
        spec.gain_r = r;
        spec.pair_cutoff =
            fixed_cutoff > 0 ? fixed_cutoff : recommended_pair_cutoff(r);
        cutoffs.push_back(spec.pair_cutoff);
        const PureState split =
            apply_beamsplitter(make_opa(spec), 0, 1, kPi / 4.0);
        const FringeScan scan =
            fringe_scan(split, phis, 0.0, Observable::nphoton_rate(2), true);
        vis.push_back(visibility(scan));
    }
    if (config.output_format == "json") {
        const json j{{"r", rs}, {"visibility", vis}, {"pair_cutoff", cutoffs}};
        return j.dump(2) + '\n';
    }
    std::string text = "r,value\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        text += fmt12(rs[i]) + ',' + fmt12(vis[i]) + '\n';
    }
    return text;
}

std::string scenario_sensitivity(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    int n = 0;
    std::string kind;
    const PureState input = fringe_input(params, n, kind);
    const std::string obs_default =
        kind == "coherent" ? "difference" : "projector";
    Observable obs;
    const std::string obs_name = params.text("observable", obs_default);
    if (obs_name == "difference") {
        obs = Observable::difference();
    } else if (obs_name == "projector") {
        obs = Observable::noon_projector(n > 0 ? n : 1);
    } else if (obs_name == "rate") {
        obs = Observable::nphoton_rate(n > 0 ? n : 1);
    } else {
        throw config_error("observable must be 'rate', 'difference' or "
                           "'projector'");
    }
    const bool bare = resolve_pipeline(params, obs);
    const double phi =
        params.number("phi", obs.kind == Observable::Kind::Difference
                                 ? kPi / 2.0
                                 : 0.4 / std::max(1, n));
    const double gamma = params.number("gamma", 0.0);
    if (gamma < 0.0) throw config_error("gamma must be >= 0");
    const SensitivityReport report =
        phase_sensitivity(input, obs, phi, gamma, bare);
    if (config.output_format == "json") {
        const json j{{"delta_phi", report.delta_phi},
                     {"at_phi", report.at_phi},
                     {"slope", report.slope},
                     {"noise", report.noise}};
        return j.dump(2) + '\n';
    }
    std::string text = "at_phi,delta_phi,slope,noise\n";
    text += fmt12(report.at_phi) + ',' + fmt12(report.delta_phi) + ',' +
            fmt12(report.slope) + ',' + fmt12(report.noise) + '\n';
    return text;
}

std::string scenario_limits(const ScenarioConfig& config) {
    const ParamReader params(config.parameters);
    const double n = params.number("n", 1.0e24);
    const double wavelength = params.number("wavelength", 1.0e-6);
    const ReferenceLimits limits = reference_limits(n, wavelength);
    if (config.output_format == "json") {
        const json j{{"snl_phi", limits.snl_phi},
                     {"hl_phi", limits.hl_phi},
                     {"snl_x", limits.snl_x},
                     {"hl_x", limits.hl_x}};
        return j.dump(2) + '\n';
    }
    std::string text = "n,snl_phi,hl_phi,snl_x,hl_x\n";
    text += fmt12(n) + ',' + fmt12(limits.snl_phi) + ',' +
            fmt12(limits.hl_phi) + ',' + fmt12(limits.snl_x) + ',' +
            fmt12(limits.hl_x) + '\n';
    return text;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{
        "fringe",      "hom",            "herald-gc",   "herald-lkd",
        "loss-sweep",  "opa-visibility", "sensitivity", "limits"};
    return names;
}

ScenarioOutcome run_scenario(const ScenarioConfig& config) {
    try {
        if (config.output_format != "csv" && config.output_format != "json") {
            throw config_error("output format must be 'csv' or 'json', got '" +
                               config.output_format + "'");
        }
        CapGuard guard;
        bool cap_pinned = false;
        if (const char* env = std::getenv("NOON_LAB_NCAP")) {
            set_global_photon_cap(parse_int("NOON_LAB_NCAP", env));
            cap_pinned = true;
        }

        std::string output;
        if (config.scenario == "fringe") {
            output = scenario_fringe(config);
        } else if (config.scenario == "hom") {
            output = scenario_hom(config);
        } else if (config.scenario == "herald-gc") {
            output = scenario_herald_gc(config);
        } else if (config.scenario == "herald-lkd") {
            output = scenario_herald_lkd(config);
        } else if (config.scenario == "loss-sweep") {
            output = scenario_loss_sweep(config);
        } else if (config.scenario == "opa-visibility") {
            output = scenario_opa_visibility(config, cap_pinned);
        } else if (config.scenario == "sensitivity") {
            output = scenario_sensitivity(config);
        } else if (config.scenario == "limits") {
            output = scenario_limits(config);
        } else {
            std::string names;
            for (const auto& name : scenario_names()) {
                if (!names.empty()) names += ", ";
                names += name;
            }
            throw config_error("unknown scenario '" + config.scenario +
                               "'; valid scenarios: " + names);
        }
        return ScenarioOutcome{0, output, ""};
    } catch (const config_error& e) {
        return ScenarioOutcome{2, "", e.what()};
    } catch (const noon_error& e) {
        return ScenarioOutcome{1, "", e.what()};
    } catch (const std::exception& e) {
        return ScenarioOutcome{1, "", e.what()};
    }
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("malformed config file '" + path +
                           "': " + e.what());
    }
    ScenarioConfig config;
    try {
        if (j.contains("scenario")) config.scenario = j.at("scenario");
        if (j.contains("output_format")) {
            config.output_format = j.at("output_format");
        }
        if (j.contains("phi_min")) config.phi_min = j.at("phi_min").get<double>();
        if (j.contains("phi_max")) config.phi_max = j.at("phi_max").get<double>();
        if (j.contains("steps")) config.steps = j.at("steps").get<int>();
        if (j.contains("parameters")) {
            for (const auto& [key, value] : j.at("parameters").items()) {
                if (value.is_string()) {
                    config.parameters[key] = value.get<std::string>();
                } else {
                    config.parameters[key] = value.dump();
                }
            }
        }
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error("invalid config value: " + std::string(e.what()));
    }
    return config;
}

void apply_override(ScenarioConfig& config, const std::string& key,
                    const std::string& value) {
    if (key == "scenario") {
        config.scenario = value;
    } else if (key == "format" || key == "output_format") {
        config.output_format = value;
    } else if (key == "phi_min") {
        config.phi_min = parse_double(key, value);
    } else if (key == "phi_max") {
        config.phi_max = parse_double(key, value);
    } else if (key == "steps") {
        config.steps = parse_int(key, value);
    } else {
        config.parameters[key] = value;
    }
}

}  // namespace noonlab::cli
