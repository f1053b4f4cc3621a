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

#include "noonlab/elements.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace noonlab {

namespace {

// ln(n!), cached. Long double keeps the factorial ratios accurate enough
// for the 1e-12 amplitude tolerances at small photon numbers.
long double log_factorial(int n) {
    static std::vector<long double> table{0.0L};
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() +
                        std::log(static_cast<long double>(table.size())));
    }
    return table[static_cast<std::size_t>(n)];
}

constexpr complex i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void check_mode(const PureState& state, int mode, const char* what) {
    if (mode < 0 || mode >= state.mode_count()) {
        throw parameter_error(std::string(what) + " mode " +
                              std::to_string(mode) + " out of range for " +
                              std::to_string(state.mode_count()) +
                              "-mode state");
    }
}

}  // namespace

PureState apply_phase(const PureState& state, int mode, double phi,
                      double gamma) {
    check_mode(state, mode, "phase");
    if (gamma < 0.0) {
        throw parameter_error("loss exponent must be >= 0, got " +
                              std::to_string(gamma));
    }
    PureState out(state.mode_count(), state.prune_threshold());
    for (const auto& [occ, amp] : state.terms()) {
        const double n = static_cast<double>(occ[mode]);
        out.append_term(occ, amp * std::polar(std::exp(-n * gamma), n * phi));
    }
    out.prune();
    return out;
}

PureState apply_cross_kerr(const PureState& state, int mode_a, int mode_b,
                           double chi) {
    check_mode(state, mode_a, "cross-Kerr");
    check_mode(state, mode_b, "cross-Kerr");
    if (mode_a == mode_b) {
        throw parameter_error("cross-Kerr requires two distinct modes");
    }
    PureState out(state.mode_count(), state.prune_threshold());
    for (const auto& [occ, amp] : state.terms()) {
        const double nn = static_cast<double>(occ[mode_a]) *
                          static_cast<double>(occ[mode_b]);
        out.append_term(occ, amp * std::polar(1.0, chi * nn));
    }
    return out;
}

PureState apply_beamsplitter(const PureState& state, int mode_a, int mode_b,
                             double theta) {
    check_mode(state, mode_a, "beam-splitter");
    check_mode(state, mode_b, "beam-splitter");
    if (mode_a == mode_b) {
        throw parameter_error("beam splitter requires two distinct modes");
    }

    const double c = std::cos(theta);
    const double s = std::sin(theta);
    PureState out(state.mode_count(), state.prune_threshold());

    if (s == 0.0) {  // pure transmission, factor c^{n} with c = +-1
        for (const auto& [occ, amp] : state.terms()) {
            const int n = occ[mode_a] + occ[mode_b];
            const double f = (c < 0.0 && (n & 1)) ? -1.0 : 1.0;
            out.accumulate(occ, amp * f);
        }
        return out;
    }
    if (c == 0.0) {  // pure reflection: swap modes, factor (i s)^{n}
        OccupationVector key;
        for (const auto& [occ, amp] : state.terms()) {
            const int n = occ[mode_a] + occ[mode_b];
            key = occ;
            std::swap(key[mode_a], key[mode_b]);
            complex f = i_power(n);
            if (s < 0.0 && (n & 1)) f = -f;
            out.accumulate(key, amp * f);
        }
        return out;
    }

    const double lc = std::log(std::abs(c));
    const double ls = std::log(std::abs(s));
    // At 50-50 the transformed pair operator for a twin term collapses to
    // (i c s)^n (a+^2 + b+^2)^n, which is free of the alternating-sum
    // cancellation of the general expansion and stays accurate for large n.
    const bool balanced = std::abs(c * c - s * s) < 1e-12;

    OccupationVector key;
    std::vector<complex> acc;
    for (const auto& [occ, amp] : state.terms()) {
        const int na = occ[mode_a];
        const int nb = occ[mode_b];
        const int n = na + nb;
        if (n == 0) {
            out.accumulate(occ, amp);
            continue;
        }
        key = occ;

        if (balanced && na == nb) {
            complex front = amp * i_power(na);
            if (c * s < 0.0 && (na & 1)) front = -front;
            const long double lcs = static_cast<long double>(na) * (lc + ls);
            for (int k = 0; k <= na; ++k) {
                const long double lmag = lcs - log_factorial(k) -
                                         log_factorial(na - k) +
                                         0.5L * (log_factorial(2 * k) +
                                                 log_factorial(2 * (na - k)));
                key[mode_a] = 2 * k;
                key[mode_b] = 2 * (na - k);
                const complex v =
                    front * static_cast<double>(std::exp(lmag));
                if (std::abs(v) > out.prune_threshold()) {
                    out.accumulate(key, v);
                }
            }
            continue;
        }

        acc.assign(static_cast<std::size_t>(n) + 1, complex{0.0, 0.0});
        for (int j = 0; j <= na; ++j) {
            const long double lj =
                0.5L * (log_factorial(na) + log_factorial(nb)) -
                log_factorial(j) - log_factorial(na - j) +
                static_cast<long double>(j + nb) * lc +
                static_cast<long double>(na - j) * ls;
            for (int m = 0; m <= nb; ++m) {
                const int p = j + m;
                const int q = n - p;
                const int kc = j + nb - m;  // transmissions
                const int ks = na - j + m;  // reflections
                const long double lmag =
                    lj - log_factorial(m) - log_factorial(nb - m) +
                    0.5L * (log_factorial(p) + log_factorial(q)) +
                    static_cast<long double>(m) * (ls - lc);
                double mag = static_cast<double>(std::exp(lmag));
                if (c < 0.0 && (kc & 1)) mag = -mag;
                if (s < 0.0 && (ks & 1)) mag = -mag;
                acc[static_cast<std::size_t>(p)] += amp * mag * i_power(ks);
            }
        }
        for (int p = 0; p <= n; ++p) {
            const complex v = acc[static_cast<std::size_t>(p)];
            if (std::abs(v) > out.prune_threshold()) {
                key[mode_a] = p;
                key[mode_b] = n - p;
                out.accumulate(key, v);
            }
        }
    }
    out.prune();
    return out;
}

CircuitStep CircuitStep::phase_shift(int mode, double phi) {
    CircuitStep st{Kind::PhaseShift, {mode}, {}, {}, {}, {}};
    st.phi = phi;
    return st;
}

CircuitStep CircuitStep::lossy_phase_shift(int mode, double phi, double gamma) {
    CircuitStep st{Kind::LossyPhaseShift, {mode}, {}, {}, {}, {}};
    st.phi = phi;
    st.gamma = gamma;
    return st;
}

CircuitStep CircuitStep::beam_splitter(int mode_a, int mode_b, double theta) {
    CircuitStep st{Kind::BeamSplitter, {mode_a, mode_b}, {}, {}, {}, {}};
    st.theta = theta;
    return st;
}

CircuitStep CircuitStep::mirror(int mode) {
    return CircuitStep{Kind::Mirror, {mode}, {}, {}, {}, {}};
}

CircuitStep CircuitStep::cross_kerr(int mode_a, int mode_b, double chi) {
    CircuitStep st{Kind::CrossKerr, {mode_a, mode_b}, {}, {}, {}, {}};
    st.chi = chi;
    return st;
}

namespace {

[[noreturn]] void step_error(std::size_t index, const std::string& msg) {
    throw parameter_error("step " + std::to_string(index) + ": " + msg);
}

void validate_step(const PureState& state, const CircuitStep& step,
                   std::size_t index) {
    const auto need_modes = [&](std::size_t count) {
        if (step.modes.size() != count) {
            step_error(index, "expected " + std::to_string(count) +
                                  " mode(s), got " +
                                  std::to_string(step.modes.size()));
        }
        for (int m : step.modes) {
            if (m < 0 || m >= state.mode_count()) {
                step_error(index, "mode " + std::to_string(m) + " out of range");
            }
        }
    };
    switch (step.kind) {
        case CircuitStep::Kind::PhaseShift:
            need_modes(1);
            if (!step.phi) step_error(index, "phase shift needs phi");
            break;
        case CircuitStep::Kind::LossyPhaseShift:
            need_modes(1);
            if (!step.phi || !step.gamma) {
                step_error(index, "lossy phase shift needs phi and gamma");
            }
            if (*step.gamma < 0.0) step_error(index, "gamma must be >= 0");
            break;
        case CircuitStep::Kind::Mirror:
            need_modes(1);
            break;
        case CircuitStep::Kind::BeamSplitter:
            need_modes(2);
            if (step.modes[0] == step.modes[1]) {
                step_error(index, "beam splitter modes must be distinct");
            }
            if (!step.theta) step_error(index, "beam splitter needs theta");
            break;
        case CircuitStep::Kind::CrossKerr:
            need_modes(2);
            if (step.modes[0] == step.modes[1]) {
                step_error(index, "cross-Kerr modes must be distinct");
            }
            if (!step.chi) step_error(index, "cross-Kerr needs chi");
            break;
    }
}

}  // namespace

PureState apply_circuit(const PureState& state,
                        const std::vector<CircuitStep>& steps) {
    PureState current = state;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const CircuitStep& step = steps[i];
        validate_step(current, step, i);
        switch (step.kind) {
            case CircuitStep::Kind::PhaseShift:
                current = apply_phase(current, step.modes[0], *step.phi, 0.0);
                break;
            case CircuitStep::Kind::LossyPhaseShift:
                current = apply_phase(current, step.modes[0], *step.phi,
                                      *step.gamma);
                break;
            case CircuitStep::Kind::Mirror:
                current = apply_phase(current, step.modes[0],
                                      std::numbers::pi / 2.0, 0.0);
                break;
            case CircuitStep::Kind::BeamSplitter:
                current = apply_beamsplitter(current, step.modes[0],
                                             step.modes[1], *step.theta);
                break;
            case CircuitStep::Kind::CrossKerr:
                current = apply_cross_kerr(current, step.modes[0],
                                           step.modes[1], *step.chi);
                break;
        }
    }
    return current;
}

}  // namespace noonlab
