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

#include "noonlab/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace noonlab {

namespace {
int g_photon_cap = 64;
}

int global_photon_cap() { return g_photon_cap; }

void set_global_photon_cap(int cap) {
    if (cap < 1) {
        throw parameter_error("photon cap must be >= 1, got " +
                              std::to_string(cap));
    }
    g_photon_cap = cap;
}

PureState::PureState(int mode_count, double prune_threshold)
    : mode_count_(mode_count), prune_threshold_(prune_threshold) {
    if (mode_count < 1) {
        throw parameter_error("mode count must be >= 1, got " +
                              std::to_string(mode_count));
    }
    if (prune_threshold < 0.0) {
        throw parameter_error("prune threshold must be >= 0");
    }
}

void PureState::validate_key(const OccupationVector& occ) const {
    if (static_cast<int>(occ.size()) != mode_count_) {
        throw dimension_error("occupation vector has " +
                              std::to_string(occ.size()) + " modes, state has " +
                              std::to_string(mode_count_));
    }
    int total = 0;
    for (int n : occ) {
        if (n < 0) throw parameter_error("negative photon count in occupation");
        total += n;
    }
    if (total > g_photon_cap) {
        throw capacity_error("term with " + std::to_string(total) +
                             " photons exceeds cap " +
                             std::to_string(g_photon_cap));
    }
}

complex PureState::amplitude(const OccupationVector& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? complex{0.0, 0.0} : it->second;
}

double PureState::probability(const OccupationVector& occ) const {
    return std::norm(amplitude(occ));
}

void PureState::accumulate(const OccupationVector& occ, complex amp) {
    validate_key(occ);
    terms_[occ] += amp;
}

void PureState::append_term(const OccupationVector& occ, complex amp) {
    validate_key(occ);
    if (terms_.empty() || terms_.rbegin()->first < occ) {
        terms_.emplace_hint(terms_.end(), occ, amp);
    } else {
        terms_[occ] += amp;
    }
}

void PureState::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= prune_threshold_) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

double PureState::norm_squared() const {
    double total = 0.0;
    for (const auto& [occ, amp] : terms_) total += std::norm(amp);
    return total;
}

PureState PureState::renormalized() const {
    const double n2 = norm_squared();
    if (terms_.empty() || n2 <= 0.0) {
        throw undefined_state_error("cannot renormalize a zero-norm state");
    }
    PureState out(mode_count_, prune_threshold_);
    const double scale = 1.0 / std::sqrt(n2);
    for (const auto& [occ, amp] : terms_) {
        out.terms_[occ] = amp * scale;
    }
    return out;
}

double norm_squared(const PureState& state) { return state.norm_squared(); }

complex inner_product(const PureState& a, const PureState& b) {
    if (a.mode_count() != b.mode_count()) {
        throw dimension_error("inner product of " +
                              std::to_string(a.mode_count()) + "-mode and " +
                              std::to_string(b.mode_count()) + "-mode states");
    }
    complex result{0.0, 0.0};
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            result += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return result;
}

Moments number_moments(const PureState& state, int mode) {
    if (mode < 0 || mode >= state.mode_count()) {
        throw parameter_error("mode " + std::to_string(mode) +
                              " out of range for " +
                              std::to_string(state.mode_count()) +
                              "-mode state");
    }
    const double w = state.norm_squared();
    if (state.empty() || w <= 0.0) {
        throw undefined_state_error("number moments of a zero-norm state");
    }
    double m1 = 0.0;
    double m2 = 0.0;
    for (const auto& [occ, amp] : state.terms()) {
        const double p = std::norm(amp);
        const double n = static_cast<double>(occ[mode]);
        m1 += p * n;
        m2 += p * n * n;
    }
    m1 /= w;
    m2 /= w;
    double var = m2 - m1 * m1;
    if (var < 0.0) var = 0.0;
    return Moments{m1, var};
}

PureState tensor_product(const PureState& a, const PureState& b) {
    PureState out(a.mode_count() + b.mode_count(),
                  std::min(a.prune_threshold(), b.prune_threshold()));
    OccupationVector key(static_cast<std::size_t>(out.mode_count()));
    for (const auto& [occ_a, amp_a] : a.terms()) {
        std::copy(occ_a.begin(), occ_a.end(), key.begin());
        for (const auto& [occ_b, amp_b] : b.terms()) {
            std::copy(occ_b.begin(), occ_b.end(),
                      key.begin() + a.mode_count());
            out.accumulate(key, amp_a * amp_b);
        }
    }
    return out;
}

}  // namespace noonlab
