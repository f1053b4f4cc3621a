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

#include <complex>
#include <map>
#include <vector>

#include "noonlab/errors.hpp"

namespace noonlab {

using complex = std::complex<double>;

/// Photon counts per mode; a Fock basis label.
using OccupationVector = std::vector<int>;

/// Mean and variance of an observable.
struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Global cap on the total photon number of any stored basis term.
/// Constructions that would exceed it throw capacity_error instead of
/// silently truncating. Default is 64.
int global_photon_cap();
void set_global_photon_cap(int cap);

/// Default amplitude magnitude below which terms are dropped.
constexpr double default_prune_threshold = 1e-14;

/// Sparse multi-mode pure state: a map from occupation vectors to complex
/// amplitudes. States may be subnormalized after loss or heralding; the
/// squared norm is then the survival probability. Treated as an immutable
/// value after construction: all operations return new states.
class PureState {
  public:
    using TermMap = std::map<OccupationVector, complex>;

    explicit PureState(int mode_count,
                       double prune_threshold = default_prune_threshold);

    int mode_count() const { return mode_count_; }
    double prune_threshold() const { return prune_threshold_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Amplitude of a basis term, zero if absent.
    complex amplitude(const OccupationVector& occ) const;

    /// |amplitude|^2 of a basis term.
    double probability(const OccupationVector& occ) const;

    /// Adds `amp` to the amplitude of `occ`. Validates the key length,
    /// entry signs and the global photon cap.
    void accumulate(const OccupationVector& occ, complex amp);

    /// accumulate() for callers that emit keys in sorted order (element
    /// kernels that preserve the basis): appends at the end when possible.
    void append_term(const OccupationVector& occ, complex amp);

    /// Drops every term with |amplitude| <= prune_threshold.
    void prune();

    double norm_squared() const;

    /// State scaled to unit norm. Throws undefined_state_error if empty.
    PureState renormalized() const;

  private:
    void validate_key(const OccupationVector& occ) const;

    int mode_count_;
    double prune_threshold_;
    TermMap terms_;
};

/// Sum of squared amplitude magnitudes; 1 for freshly prepared states,
/// the survival probability after loss or projection.
double norm_squared(const PureState& state);

/// <a|b>, conjugate-linear in the first argument.
/// Throws dimension_error on mode-count mismatch.
complex inner_product(const PureState& a, const PureState& b);

/// Mean and variance of the photon number in one mode, computed on the
/// renormalized state.
Moments number_moments(const PureState& state, int mode);

/// Kronecker product: modes of `a` followed by modes of `b`.
/// Throws capacity_error if any combined term exceeds the photon cap.
PureState tensor_product(const PureState& a, const PureState& b);

}  // namespace noonlab
