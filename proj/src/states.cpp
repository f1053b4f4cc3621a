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

#include "noonlab/states.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace noonlab {

PureState make_fock(const OccupationVector& counts) {
    if (counts.empty()) throw parameter_error("empty occupation vector");
    PureState out(static_cast<int>(counts.size()));
    out.accumulate(counts, complex{1.0, 0.0});
    return out;
}

PureState make_coherent(const CoherentSpec& spec) {
    if (spec.tail_epsilon <= 0.0 || spec.tail_epsilon > 1e-6) {
        throw parameter_error("tail_epsilon must lie in (0, 1e-6]");
    }
    const double nbar = std::norm(spec.alpha);
    const int cap = global_photon_cap();
    if (nbar > cap / 4.0) {
        throw capacity_error("coherent |alpha|^2 = " + std::to_string(nbar) +
                             " exceeds cap/4 = " + std::to_string(cap / 4.0));
    }
    // amp(n) = e^{-|a|^2/2} a^n / sqrt(n!), built up by recurrence.
    std::vector<complex> amps;
    complex a{std::exp(-nbar / 2.0), 0.0};
    double mass = std::norm(a);
    amps.push_back(a);
    int n = 0;
    while (1.0 - mass >= spec.tail_epsilon) {
        ++n;
        if (n > cap) {
            throw capacity_error("coherent tail does not fit under photon cap");
        }
        a *= spec.alpha / std::sqrt(static_cast<double>(n));
        mass += std::norm(a);
        amps.push_back(a);
    }
    PureState out(1);
    const double scale = 1.0 / std::sqrt(mass);
    for (int k = 0; k <= n; ++k) {
        out.accumulate({k}, amps[static_cast<std::size_t>(k)] * scale);
    }
    out.prune();
    return out;
}

PureState make_noon(int n_photons) {
    if (n_photons < 1) {
        throw parameter_error("photon number must be >= 1, got " +
                              std::to_string(n_photons));
    }
    if (n_photons > global_photon_cap()) {
        throw capacity_error("N = " + std::to_string(n_photons) +
                             " exceeds photon cap");
    }
    PureState out(2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.accumulate({n_photons, 0}, complex{inv_sqrt2, 0.0});
    out.accumulate({0, n_photons}, complex{inv_sqrt2, 0.0});
    return out;
}

PureState make_opa(const OpaSpec& spec) {
    if (spec.gain_r < 0.0) throw parameter_error("gain must be >= 0");
    if (spec.pair_cutoff < 1) throw parameter_error("pair_cutoff must be >= 1");
    if (2 * spec.pair_cutoff > global_photon_cap()) {
        throw capacity_error("pair_cutoff " + std::to_string(spec.pair_cutoff) +
                             " needs " + std::to_string(2 * spec.pair_cutoff) +
                             " photons, cap is " +
                             std::to_string(global_photon_cap()));
    }
    const double t = std::tanh(spec.gain_r);
    std::vector<double> coeff;
    double c = 1.0 / std::cosh(spec.gain_r);
    double mass = 0.0;
    for (int n = 0; n <= spec.pair_cutoff; ++n) {
        coeff.push_back(c);
        mass += c * c;
        c *= t;
        if (c == 0.0) break;
    }
    PureState out(2);
    const double scale = 1.0 / std::sqrt(mass);
    for (std::size_t n = 0; n < coeff.size(); ++n) {
        const int k = static_cast<int>(n);
        const complex amp{coeff[n] * scale, 0.0};
        if (std::abs(amp) > out.prune_threshold()) {
            out.accumulate({k, k}, amp);
        }
    }
    return out;
}

int recommended_pair_cutoff(double gain_r, double tail) {
    if (gain_r < 0.0) throw parameter_error("gain must be >= 0");
    if (tail <= 0.0 || tail >= 1.0) throw parameter_error("tail must lie in (0,1)");
    const double q = std::tanh(gain_r) * std::tanh(gain_r);
    if (q == 0.0) return 1;
    // geometric tail beyond cutoff M is q^{M+1}
    int m = 1;
    while ((m + 1) * std::log(q) >= std::log(tail)) ++m;
    return m;
}

}  // namespace noonlab
