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

#include <optional>
#include <vector>

#include "noonlab/fock.hpp"

namespace noonlab {

/// One optical element with its modes and parameters. Unused parameters are
/// absent. Reflection convention: +i (a pi/2 phase) on every beam-splitter
/// reflection, none on transmission.
struct CircuitStep {
    enum class Kind { PhaseShift, LossyPhaseShift, BeamSplitter, Mirror, CrossKerr };

    Kind kind;
    std::vector<int> modes;
    std::optional<double> theta;  // BS mixing angle, 50-50 = pi/4
    std::optional<double> phi;    // phase in radians
    std::optional<double> gamma;  // loss exponent, nepers per pass
    std::optional<double> chi;    // cross-Kerr strength in radians

    static CircuitStep phase_shift(int mode, double phi);
    static CircuitStep lossy_phase_shift(int mode, double phi, double gamma);
    static CircuitStep beam_splitter(int mode_a, int mode_b, double theta);
    static CircuitStep mirror(int mode);
    static CircuitStep cross_kerr(int mode_a, int mode_b, double chi);
};

/// Multiplies each term with n photons in `mode` by e^{i n phi - n gamma}.
/// With gamma = 0 this is the lossless phase shifter; with gamma > 0 the
/// state is subnormalized and norm_squared is the survival probability.
PureState apply_phase(const PureState& state, int mode, double phi,
                      double gamma = 0.0);

/// Beam splitter of mixing angle theta on two distinct modes:
///   a+ -> cos(theta) a+ + i sin(theta) b+
///   b+ -> i sin(theta) a+ + cos(theta) b+
/// Unitary; preserves the total photon number of every term.
PureState apply_beamsplitter(const PureState& state, int mode_a, int mode_b,
                             double theta);

/// Each term acquires phase e^{i chi n_a n_b}. chi = pi gives the ideal
/// conditional pi shift per control photon.
PureState apply_cross_kerr(const PureState& state, int mode_a, int mode_b,
                           double chi);

/// Left-to-right composition of steps. The first invalid step aborts with
/// its error and the step index.
PureState apply_circuit(const PureState& state,
                        const std::vector<CircuitStep>& steps);

}  // namespace noonlab
