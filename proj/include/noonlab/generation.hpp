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

#include <functional>
#include <map>
#include <optional>

#include "noonlab/fock.hpp"

namespace noonlab {

/// Exact photon counts demanded on ancilla modes for post-selection.
struct HeraldPattern {
    std::map<int, int> requirements;  // ancilla mode -> exact count
};

/// Post-selected output with its bookkeeping. `output` is renormalized and
/// has the ancilla modes removed; success_probability is the squared norm
/// of the projected state before renormalization. A zero-probability herald
/// is a value (empty output), not an error.
struct GenerationResult {
    PureState output;
    double success_probability = 0.0;
    std::optional<double> fidelity_to_target;
};

/// Keeps only the terms matching every required ancilla count. When a
/// target state is supplied the fidelity |<target|output>|^2 is reported.
GenerationResult herald_project(const PureState& state,
                                const HeraldPattern& pattern,
                                const PureState* target = nullptr);

/// |<target|state>|^2 on renormalized states; global-phase invariant.
double state_fidelity(const PureState& target, const PureState& state);

/// Best overlap with the ideal N00N pair (|N,0> +- |0,N>)/sqrt(2); the two
/// signs are physically interchangeable, so the larger overlap is reported.
double noon_fidelity(const PureState& state, int n_photons);

/// Which ancilla detector fired in the Kerr-coupled generator.
enum class AncillaPort { C, D };

/// Kerr-coupled twin-interferometer N00N generator: a single ancilla photon
/// in its own interferometer drives a conditional pi shift (chi = pi) in the
/// main interferometer, so heralding the ancilla port projects the main
/// modes onto (|N,0> +- |0,N>)/sqrt(2) with probability 1/2 per port.
GenerationResult generate_noon_gc(int n_photons, double chi,
                                  AncillaPort port);
GenerationResult generate_noon_gc(int n_photons);

/// Linear-optics heralded N = 4 generator: |3,3> through a 50-50 splitter,
/// an ancilla tap of angle tap_theta on each arm, heralding exactly one
/// photon in each tap, and a final 50-50 recombination.
GenerationResult generate_noon4_lkd(double tap_theta);

struct OptimizeResult {
    double theta_star;
    double value_star;
};

/// Deterministic 1-D maximizer: coarse grid (>= 64 points, ties broken
/// toward the smallest theta) followed by golden-section refinement to
/// 1e-6 in theta. A flat objective (grid variation < 1e-12) is rejected
/// with degenerate_error.
OptimizeResult maximize_scalar(const std::function<double(double)>& objective,
                               double lo, double hi, int grid_points = 129,
                               double theta_tol = 1e-6);

/// Objective for tuning the tap angle of the N = 4 generator.
enum class LkdObjective { Probability, ProbabilityTimesFidelity };

OptimizeResult optimize_success(LkdObjective objective, double lo, double hi);

}  // namespace noonlab
