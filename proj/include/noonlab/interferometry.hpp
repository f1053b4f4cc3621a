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

#include <string>
#include <vector>

#include "noonlab/fock.hpp"

namespace noonlab {

/// Classical interferometer output for input intensity I_A and phase phi.
struct ClassicalSignal {
    double i_c;  // dark-port intensity  I_A sin^2(phi/2)
    double i_d;  // bright-port intensity I_A cos^2(phi/2)
    double m;    // difference signal I_D - I_C = I_A cos(phi)
};

ClassicalSignal classical_mzi_signal(double intensity_a, double phi);

/// Detection observable for fringe scans and sensitivity estimates.
///
/// Difference     mean photon difference n_D - n_C on the renormalized
///                output (mode 1 is port D, mode 0 is port C).
/// NPhotonRate    N-fold coincidence rate <(e+)^N e^N> with the symmetric
///                detection mode e = (a+b)/sqrt(2). Recorded as an absolute
///                rate: a subnormalized (lossy) state is NOT renormalized,
///                so lost amplitude shows up as a weaker rate.
/// NoonProjector  pair projector |N,0><0,N| + |0,N><N,0| on the
///                renormalized state; mean cos(N phi) on a phase-shifted
///                N00N input, squared operator = identity on that subspace.
struct Observable {
    enum class Kind { Difference, NPhotonRate, NoonProjector };

    Kind kind = Kind::Difference;
    int n = 0;

    static Observable difference() { return {Kind::Difference, 0}; }
    static Observable nphoton_rate(int n) { return {Kind::NPhotonRate, n}; }
    static Observable noon_projector(int n) { return {Kind::NoonProjector, n}; }

    std::string tag() const;
};

/// Phase grid with per-point observable means and variances.
struct FringeScan {
    std::vector<double> phis;
    std::vector<double> values;
    std::vector<double> variances;
    std::string observable_tag;
};

/// delta_phi = noise / |slope| at a working point.
struct SensitivityReport {
    double delta_phi;
    double at_phi;
    double slope;
    double noise;
};

struct ReferenceLimits {
    double snl_phi;
    double hl_phi;
    double snl_x;
    double hl_x;
};

/// Interferometer pass on a two-mode state: 50-50 splitter, lossy phase
/// (phi, gamma) on mode 0, 50-50 splitter. With bare_phase = true the
/// input is taken as already prepared between the splitters and only the
/// phase element is applied.
PureState run_mzi(const PureState& input, double phi, double gamma,
                  bool bare_phase = false);

/// Mean and variance of n_D - n_C on the renormalized state.
Moments difference_signal(const PureState& state);

/// Mean and variance of (e+)^N e^N, e = (a+b)/sqrt(2), on the renormalized
/// state. On a phase-shifted N00N(N) the mean is (N!/2^N)(1 + cos(N phi)).
Moments nphoton_rate(const PureState& state, int n);

/// Same operator moments weighted by the survival probability (no
/// renormalization); equals nphoton_rate on normalized states.
Moments nphoton_rate_raw(const PureState& state, int n);

/// Moments of the N00N pair projector on the renormalized state.
Moments noon_projector_moments(const PureState& state, int n);

/// Evaluates the observable after run_mzi (or the bare phase) at each grid
/// point. Deterministic; the grid must be non-empty and strictly
/// increasing.
FringeScan fringe_scan(const PureState& input,
                       const std::vector<double>& phi_grid, double gamma,
                       const Observable& observable, bool bare_phase);

/// (max-min)/(max+min) over the grid of a non-negative rate scan. Signed
/// observables are rejected with contract_error; use contrast_factor.
double visibility(const FringeScan& scan);

/// Ratio of peak-to-peak amplitudes (max-min)_lossy / (max-min)_lossless.
/// The scans must share grid and observable.
double contrast_factor(const FringeScan& lossy, const FringeScan& lossless);

/// Error-propagated phase uncertainty sqrt(var)/|d mean/d phi| at phi.
/// The slope is a central finite difference with step 1e-5 rad, checked by
/// comparing the half-step estimate (1e-6 relative agreement required).
SensitivityReport phase_sensitivity(const PureState& input,
                                    const Observable& observable, double phi,
                                    double gamma, bool bare_phase);

/// Shot-noise and Heisenberg limits for mean photon number n:
/// 1/sqrt(n) and 1/n in phase, scaled by lambda/(2 pi) in displacement.
ReferenceLimits reference_limits(double n, double wavelength);

/// lambda / N: the fringe spacing of an N-photon bundle.
double effective_wavelength(double wavelength, int n);

/// Uniform grid with `steps` points including both endpoints.
std::vector<double> linspace(double lo, double hi, int steps);

}  // namespace noonlab
