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

#include "noonlab/interferometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "noonlab/elements.hpp"

namespace noonlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

ClassicalSignal classical_mzi_signal(double intensity_a, double phi) {
    if (intensity_a < 0.0) {
        throw parameter_error("intensity must be >= 0");
    }
    const double sn = std::sin(phi / 2.0);
    double small = intensity_a * sn * sn;  // i_c
    double large = intensity_a - small;    // i_d
    const bool c_is_small = small <= large;
    if (!c_is_small) std::swap(small, large);
    // the ports must sum to the input intensity exactly: recover the
    // rounding defect of the pair (Fast2Sum) and fold it into the dimmer
    // port, whose finer spacing represents it exactly
    const double sum = large + small;
    const double err = small - (sum - large);
    small += (intensity_a - sum) - err;
    const double i_c = c_is_small ? small : large;
    const double i_d = c_is_small ? large : small;
    return ClassicalSignal{i_c, i_d, intensity_a * std::cos(phi)};
}

std::string Observable::tag() const {
    switch (kind) {
        case Kind::Difference: return "difference";
        case Kind::NPhotonRate: return "nphoton_rate_" + std::to_string(n);
        default: return "noon_projector_" + std::to_string(n);
    }
}

PureState run_mzi(const PureState& input, double phi, double gamma,
                  bool bare_phase) {
    if (input.mode_count() != 2) {
        throw dimension_error("interferometer input must be two-mode, got " +
                              std::to_string(input.mode_count()));
    }
    if (bare_phase) {
        return apply_phase(input, 0, phi, gamma);
    }
    PureState st = apply_beamsplitter(input, 0, 1, kPi / 4.0);
    st = apply_phase(st, 0, phi, gamma);
    return apply_beamsplitter(st, 0, 1, kPi / 4.0);
}

Moments difference_signal(const PureState& state) {
    if (state.mode_count() != 2) {
        throw dimension_error("difference signal needs a two-mode state");
    }
    const double w = state.norm_squared();
    if (state.empty() || w <= 0.0) {
        throw undefined_state_error("difference signal of a zero-norm state");
    }
    double m1 = 0.0;
    double m2 = 0.0;
    for (const auto& [occ, amp] : state.terms()) {
        const double p = std::norm(amp);
        const double v = static_cast<double>(occ[1] - occ[0]);
        m1 += p * v;
        m2 += p * v * v;
    }
    m1 /= w;
    m2 /= w;
    double var = m2 - m1 * m1;
    if (var < 0.0) var = 0.0;
    return Moments{m1, var};
}

namespace {

// Two-mode terms with the occupation packed into one ordered key. A key
// shift common to a sorted stream keeps it sorted, so applying one ladder
// operator is a merge of two shifted streams instead of a map rebuild.
struct FlatTerm {
    std::int64_t key;  // (p << 32) | q
    complex amp;
};

std::vector<FlatTerm> flatten_two_mode(const PureState& state) {
    std::vector<FlatTerm> flat;
    flat.reserve(state.term_count());
    for (const auto& [occ, amp] : state.terms()) {
        flat.push_back({(static_cast<std::int64_t>(occ[0]) << 32) | occ[1],
                        amp});
    }
    return flat;
}

// e psi (lower = true) or e+ psi, with e = (a+b)/sqrt(2).
std::vector<FlatTerm> symmetric_ladder(const std::vector<FlatTerm>& in,
                                       bool lower) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<FlatTerm> out;
    out.reserve(2 * in.size());
    std::size_t ia = 0;  // mode-a stream: key shifted by 1 << 32
    std::size_t ib = 0;  // mode-b stream: key shifted by 1
    const auto next_a = [&](std::size_t i) -> FlatTerm {
        const int p = static_cast<int>(in[i].key >> 32);
        const double root =
            std::sqrt(static_cast<double>(lower ? p : p + 1)) * inv_sqrt2;
        const std::int64_t shift = static_cast<std::int64_t>(1) << 32;
        return {lower ? in[i].key - shift : in[i].key + shift,
                in[i].amp * root};
    };
    const auto next_b = [&](std::size_t i) -> FlatTerm {
        const int q = static_cast<int>(in[i].key & 0xffffffff);
        const double root =
            std::sqrt(static_cast<double>(lower ? q : q + 1)) * inv_sqrt2;
        return {lower ? in[i].key - 1 : in[i].key + 1, in[i].amp * root};
    };
    if (lower) {  // skip annihilated terms
        while (ia < in.size() && (in[ia].key >> 32) == 0) ++ia;
        while (ib < in.size() && (in[ib].key & 0xffffffff) == 0) ++ib;
    }
    // the a-stream keys are only shifted, so each stream stays sorted;
    // merge-accumulate them
    const auto push = [&](const FlatTerm& term) {
        if (!out.empty() && out.back().key == term.key) {
            out.back().amp += term.amp;
        } else {
            out.push_back(term);
        }
    };
    while (true) {
        std::size_t* pick = nullptr;
        FlatTerm term{0, {0.0, 0.0}};
        if (ia < in.size()) {
            term = next_a(ia);
            pick = &ia;
        }
        if (ib < in.size()) {
            const FlatTerm tb = next_b(ib);
            if (pick == nullptr || tb.key < term.key) {
                term = tb;
                pick = &ib;
            }
        }
        if (pick == nullptr) break;
        push(term);
        ++*pick;
        if (lower) {
            while (ia < in.size() && (in[ia].key >> 32) == 0) ++ia;
            while (ib < in.size() && (in[ib].key & 0xffffffff) == 0) ++ib;
        }
    }
    return out;
}

double flat_norm_squared(const std::vector<FlatTerm>& terms) {
    double total = 0.0;
    for (const FlatTerm& term : terms) total += std::norm(term.amp);
    return total;
}

Moments rate_moments(const PureState& state, int n, bool renormalize) {
    if (state.mode_count() != 2) {
        throw dimension_error("rate needs a two-mode state");
    }
    if (n < 1) throw parameter_error("rate order must be >= 1");
    const double w = state.norm_squared();
    if (state.empty() || w <= 0.0) {
        throw undefined_state_error("rate of a zero-norm state");
    }
    std::vector<FlatTerm> lowered = flatten_two_mode(state);
    for (int k = 0; k < n; ++k) lowered = symmetric_ladder(lowered, true);
    std::vector<FlatTerm> raised = lowered;
    for (int k = 0; k < n; ++k) raised = symmetric_ladder(raised, false);
    const double scale = renormalize ? 1.0 / w : 1.0;
    const double mean = flat_norm_squared(lowered) * scale;
    const double second = flat_norm_squared(raised) * scale;
    double var = second - mean * mean;
    if (var < 0.0) var = 0.0;
    return Moments{mean, var};
}

}  // namespace

Moments nphoton_rate(const PureState& state, int n) {
    return rate_moments(state, n, true);
}

Moments nphoton_rate_raw(const PureState& state, int n) {
    return rate_moments(state, n, false);
}

Moments noon_projector_moments(const PureState& state, int n) {
    if (state.mode_count() != 2) {
        throw dimension_error("pair projector needs a two-mode state");
    }
    if (n < 1) throw parameter_error("projector order must be >= 1");
    const double w = state.norm_squared();
    if (state.empty() || w <= 0.0) {
        throw undefined_state_error("projector moments of a zero-norm state");
    }
    const complex c_up = state.amplitude({n, 0});
    const complex c_down = state.amplitude({0, n});
    const double mean = 2.0 * std::real(std::conj(c_up) * c_down) / w;
    const double second = (std::norm(c_up) + std::norm(c_down)) / w;
    double var = second - mean * mean;
    if (var < 0.0) var = 0.0;
    return Moments{mean, var};
}

namespace {

Moments evaluate_observable(const PureState& state, const Observable& obs) {
    switch (obs.kind) {
        case Observable::Kind::Difference:
            return difference_signal(state);
        case Observable::Kind::NPhotonRate:
            return nphoton_rate_raw(state, obs.n);
        default:
            return noon_projector_moments(state, obs.n);
    }
}

}  // namespace

FringeScan fringe_scan(const PureState& input,
                       const std::vector<double>& phi_grid, double gamma,
                       const Observable& observable, bool bare_phase) {
    if (phi_grid.empty()) throw parameter_error("empty phase grid");
    for (std::size_t i = 1; i < phi_grid.size(); ++i) {
        if (phi_grid[i] <= phi_grid[i - 1]) {
            throw parameter_error("phase grid must be strictly increasing");
        }
    }
    FringeScan scan;
    scan.observable_tag = observable.tag();
    scan.phis = phi_grid;
    scan.values.reserve(phi_grid.size());
    scan.variances.reserve(phi_grid.size());
    for (double phi : phi_grid) {
        const Moments m =
            evaluate_observable(run_mzi(input, phi, gamma, bare_phase),
                                observable);
        scan.values.push_back(m.mean);
        scan.variances.push_back(m.variance);
    }
    return scan;
}

double visibility(const FringeScan& scan) {
    if (scan.values.empty()) throw parameter_error("empty scan");
    if (scan.observable_tag.rfind("nphoton_rate", 0) != 0) {
        throw contract_error("visibility is defined for non-negative rate "
                             "scans; use contrast_factor for signed signals");
    }
    double mx = scan.values.front();
    double mn = scan.values.front();
    for (double v : scan.values) {
        if (v < -1e-12) {
            throw contract_error("rate scan has negative values; use "
                                 "contrast_factor");
        }
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    mn = std::max(mn, 0.0);
    if (mx + mn <= 0.0) {
        throw degenerate_error("visibility of an all-zero scan");
    }
    return (mx - mn) / (mx + mn);
}

namespace {

double peak_to_peak(const FringeScan& scan) {
    const auto [mn, mx] =
        std::minmax_element(scan.values.begin(), scan.values.end());
    return *mx - *mn;
}

}  // namespace

double contrast_factor(const FringeScan& lossy, const FringeScan& lossless) {
    if (lossy.observable_tag != lossless.observable_tag) {
        throw parameter_error("contrast factor needs matching observables");
    }
    if (lossy.phis != lossless.phis) {
        throw parameter_error("contrast factor needs identical phase grids");
    }
    const double ref = peak_to_peak(lossless);
    if (ref <= 0.0) {
        throw degenerate_error("lossless scan has zero peak-to-peak amplitude");
    }
    return peak_to_peak(lossy) / ref;
}

SensitivityReport phase_sensitivity(const PureState& input,
                                    const Observable& observable, double phi,
                                    double gamma, bool bare_phase) {
    const auto mean_at = [&](double x) {
        return evaluate_observable(run_mzi(input, x, gamma, bare_phase),
                                   observable)
            .mean;
    };
    const double h = 1e-5;
    const double d_full = (mean_at(phi + h) - mean_at(phi - h)) / (2.0 * h);
    const double d_half = (mean_at(phi + h / 2.0) - mean_at(phi - h / 2.0)) / h;
    const double scale = std::max(std::abs(d_full), std::abs(d_half));
    if (scale < 1e-9) {
        throw singular_point_error("vanishing fringe slope at phi = " +
                                   std::to_string(phi));
    }
    if (std::abs(d_full - d_half) > 1e-6 * scale) {
        throw singular_point_error("unstable derivative at phi = " +
                                   std::to_string(phi));
    }
    const double slope = (4.0 * d_half - d_full) / 3.0;
    const Moments m =
        evaluate_observable(run_mzi(input, phi, gamma, bare_phase), observable);
    const double noise = std::sqrt(m.variance);
    return SensitivityReport{noise / std::abs(slope), phi, slope, noise};
}

ReferenceLimits reference_limits(double n, double wavelength) {
    if (n <= 0.0) throw parameter_error("photon number must be > 0");
    if (wavelength <= 0.0) throw parameter_error("wavelength must be > 0");
    const double reduced = wavelength / (2.0 * kPi);
    const double snl_phi = 1.0 / std::sqrt(n);
    const double hl_phi = 1.0 / n;
    return ReferenceLimits{snl_phi, hl_phi, reduced * snl_phi,
                           reduced * hl_phi};
}

double effective_wavelength(double wavelength, int n) {
    if (wavelength <= 0.0) throw parameter_error("wavelength must be > 0");
    if (n < 1) throw parameter_error("photon number must be >= 1");
    return wavelength / static_cast<double>(n);
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 2) throw parameter_error("grid needs at least 2 points");
    if (!(lo < hi)) throw parameter_error("grid bounds must satisfy lo < hi");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        grid[static_cast<std::size_t>(k)] =
            lo + (hi - lo) * static_cast<double>(k) /
                     static_cast<double>(steps - 1);
    }
    return grid;
}

}  // namespace noonlab
