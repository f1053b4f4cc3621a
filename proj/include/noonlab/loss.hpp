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

#include <vector>

#include "noonlab/fock.hpp"

namespace noonlab {

/// Fringe-contrast decay under single-arm loss gamma: e^{-gamma} for a
/// coherent beam, e^{-N gamma} for the N00N rate fringe. Per-photon
/// amplitude decay makes the N-photon curve the N-th power of the
/// classical one.
struct LossSweep {
    std::vector<double> gammas;
    std::vector<double> coherent_contrast;
    std::vector<double> noon_contrast;
    int N = 0;
};

/// Closed-form contrast curves over a loss grid. The full state simulation
/// reproduces these within 1e-9 (see simulated_coherent_contrast and
/// simulated_noon_contrast).
LossSweep contrast_curves(int n_photons, double n_coherent,
                          const std::vector<double>& gamma_grid);

/// Contrast of the simulated difference-signal fringe of a coherent input
/// with mean photon number n_coherent, relative to the lossless fringe.
double simulated_coherent_contrast(double n_coherent, double gamma);

/// Contrast of the simulated N-photon-rate fringe of a N00N(N) input,
/// relative to the lossless fringe.
double simulated_noon_contrast(int n_photons, double gamma);

/// Loss at which the N00N fringe slope (per unit lossless amplitude) drops
/// to the coherent one: gamma* = ln(N)/(N-1). Beyond it the N-photon state
/// does worse. Requires N >= 2.
double breakeven_gamma(int n_photons);

}  // namespace noonlab
