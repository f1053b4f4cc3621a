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

#include "noonlab/generation.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "noonlab/elements.hpp"
#include "noonlab/states.hpp"

namespace noonlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

GenerationResult herald_project(const PureState& state,
                                const HeraldPattern& pattern,
                                const PureState* target) {
    for (const auto& [mode, count] : pattern.requirements) {
        if (mode < 0 || mode >= state.mode_count()) {
            throw parameter_error("herald mode " + std::to_string(mode) +
                                  " out of range");
        }
        if (count < 0) throw parameter_error("herald count must be >= 0");
    }
    const int kept_modes =
        state.mode_count() - static_cast<int>(pattern.requirements.size());
    if (kept_modes < 1) {
        throw parameter_error("herald pattern would consume every mode");
    }

    PureState projected(kept_modes, state.prune_threshold());
    double probability = 0.0;
    OccupationVector key(static_cast<std::size_t>(kept_modes));
    for (const auto& [occ, amp] : state.terms()) {
        bool match = true;
        for (const auto& [mode, count] : pattern.requirements) {
            if (occ[static_cast<std::size_t>(mode)] != count) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        probability += std::norm(amp);
        std::size_t k = 0;
        for (int m = 0; m < state.mode_count(); ++m) {
            if (!pattern.requirements.count(m)) {
                key[k++] = occ[static_cast<std::size_t>(m)];
            }
        }
        projected.accumulate(key, amp);
    }

    GenerationResult result{PureState(kept_modes, state.prune_threshold()),
                            probability, std::nullopt};
    if (probability > 0.0) {
        result.output = projected.renormalized();
    }
    if (target != nullptr) {
        result.fidelity_to_target =
            probability > 0.0 ? state_fidelity(*target, result.output) : 0.0;
    }
    return result;
}

double state_fidelity(const PureState& target, const PureState& state) {
    return std::norm(
        inner_product(target.renormalized(), state.renormalized()));
}

double noon_fidelity(const PureState& state, int n_photons) {
    if (state.mode_count() != 2) {
        throw dimension_error("N00N fidelity needs a two-mode state");
    }
    const double w = state.norm_squared();
    if (state.empty() || w <= 0.0) return 0.0;
    const complex c_up = state.amplitude({n_photons, 0});
    const complex c_down = state.amplitude({0, n_photons});
    const double plus = std::norm(c_up + c_down) / (2.0 * w);
    const double minus = std::norm(c_up - c_down) / (2.0 * w);
    return std::max(plus, minus);
}

// Mode layout of the Kerr-coupled generator: 0,1 main interferometer
// (photons enter mode 0), 2,3 ancilla interferometer (one photon enters
// mode 2). The Kerr element couples the ancilla lower arm (3) to the main
// upper arm (0); a fixed -pi/2 plate on the main bright port keeps the
// balanced interferometer an identity map so the heralded relative phase
// is +-1 for every N.
GenerationResult generate_noon_gc(int n_photons, double chi,
                                  AncillaPort port) {
    if (n_photons < 1) throw parameter_error("photon number must be >= 1");
    if (n_photons + 1 > global_photon_cap()) {
        throw capacity_error("N + ancilla photon exceeds photon cap");
    }
    PureState input(4);
    input.accumulate({n_photons, 0, 1, 0}, complex{1.0, 0.0});

    const std::vector<CircuitStep> circuit{
        CircuitStep::beam_splitter(2, 3, kPi / 4.0),
        CircuitStep::beam_splitter(0, 1, kPi / 4.0),
        CircuitStep::cross_kerr(3, 0, chi),
        CircuitStep::beam_splitter(0, 1, kPi / 4.0),
        CircuitStep::phase_shift(1, -kPi / 2.0),
        CircuitStep::beam_splitter(2, 3, kPi / 4.0),
    };
    const PureState out = apply_circuit(input, circuit);

    HeraldPattern pattern;
    if (port == AncillaPort::C) {
        pattern.requirements = {{2, 1}, {3, 0}};
    } else {
        pattern.requirements = {{2, 0}, {3, 1}};
    }
    GenerationResult result = herald_project(out, pattern);
    result.fidelity_to_target = noon_fidelity(result.output, n_photons);
    return result;
}

GenerationResult generate_noon_gc(int n_photons) {
    return generate_noon_gc(n_photons, kPi, AncillaPort::C);
}

// Mode layout: 0,1 interferometer arms, 2 upper-arm tap output, 3
// lower-arm tap output. The pi/2 plate on the upper arm sets the relative
// phase of the heralded |3,1>/|1,3> pair so the final splitter runs the
// two-photon coalescence in reverse and empties the middle of the output
// distribution.
GenerationResult generate_noon4_lkd(double tap_theta) {
    if (!(tap_theta > 0.0 && tap_theta < kPi / 2.0)) {
        throw parameter_error("tap angle must lie in (0, pi/2)");
    }
    if (global_photon_cap() < 6) {
        throw capacity_error("twin-triple input needs a photon cap >= 6");
    }
    PureState input(4);
    input.accumulate({3, 3, 0, 0}, complex{1.0, 0.0});

    const std::vector<CircuitStep> circuit{
        CircuitStep::beam_splitter(0, 1, kPi / 4.0),
        CircuitStep::beam_splitter(0, 2, tap_theta),
        CircuitStep::beam_splitter(1, 3, tap_theta),
        CircuitStep::mirror(0),
        CircuitStep::beam_splitter(0, 1, kPi / 4.0),
    };
    const PureState out = apply_circuit(input, circuit);

    HeraldPattern pattern;
    pattern.requirements = {{2, 1}, {3, 1}};
    GenerationResult result = herald_project(out, pattern);
    result.fidelity_to_target = noon_fidelity(result.output, 4);
    return result;
}

OptimizeResult maximize_scalar(const std::function<double(double)>& objective,
                               double lo, double hi, int grid_points,
                               double theta_tol) {
    if (!(lo < hi)) throw parameter_error("bounds must satisfy lo < hi");
    if (grid_points < 64) grid_points = 64;

    std::vector<double> xs(static_cast<std::size_t>(grid_points));
    std::vector<double> fs(static_cast<std::size_t>(grid_points));
    double best = -std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    for (int k = 0; k < grid_points; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) /
                                  static_cast<double>(grid_points - 1);
        const double f = objective(x);
        xs[static_cast<std::size_t>(k)] = x;
        fs[static_cast<std::size_t>(k)] = f;
        if (f > best) {  // strict: ties keep the smallest theta
            best = f;
            best_idx = static_cast<std::size_t>(k);
        }
        worst = std::min(worst, f);
    }
    if (best - worst < 1e-12) {
        throw degenerate_error("objective is flat over the search interval");
    }

    double a = best_idx == 0 ? xs.front() : xs[best_idx - 1];
    double b = best_idx + 1 >= xs.size() ? xs.back() : xs[best_idx + 1];

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > theta_tol) {
        if (f1 > f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2);
        }
    }
    const double theta = 0.5 * (a + b);
    return OptimizeResult{theta, objective(theta)};
}

OptimizeResult optimize_success(LkdObjective objective, double lo, double hi) {
    if (!(lo > 0.0 && hi < kPi / 2.0)) {
        throw parameter_error("bounds must lie inside (0, pi/2)");
    }
    const auto fn = [objective](double theta) {
        const GenerationResult r = generate_noon4_lkd(theta);
        if (objective == LkdObjective::Probability) {
            return r.success_probability;
        }
        return r.success_probability * r.fidelity_to_target.value_or(0.0);
    };
    return maximize_scalar(fn, lo, hi);
}

}  // namespace noonlab
