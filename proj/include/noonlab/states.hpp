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

#include "noonlab/fock.hpp"

namespace noonlab {

/// Parameters for a single-mode coherent state. The Fock expansion is
/// truncated at the smallest photon number whose remaining Poisson tail
/// mass is below tail_epsilon, then renormalized.
struct CoherentSpec {
    complex alpha{0.0, 0.0};
    double tail_epsilon = 1e-12;
};

/// Parameters for the two-mode pair source: amplitudes tanh(r)^n / cosh(r)
/// on |n,n>, truncated at pair_cutoff and renormalized.
struct OpaSpec {
    double gain_r = 0.0;
    int pair_cutoff = 1;
};

/// Single basis ket with amplitude 1.
PureState make_fock(const OccupationVector& counts);

/// Coherent state |alpha> in one mode. Requires |alpha|^2 <= cap/4 so the
/// Poisson tail fits under the photon cap.
PureState make_coherent(const CoherentSpec& spec);

/// (|N,0> + |0,N>)/sqrt(2) on two modes.
PureState make_noon(int n_photons);

/// Two-mode squeezed pair state, sum_n a_n |n,n>.
PureState make_opa(const OpaSpec& spec);

/// Smallest pair_cutoff whose neglected coefficient tail has probability
/// below `tail`, defaulting to the 1e-10 contract of OpaSpec.
int recommended_pair_cutoff(double gain_r, double tail = 1e-10);

}  // namespace noonlab
