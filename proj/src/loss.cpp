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

#include "noonlab/loss.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noonlab/interferometry.hpp"
#include "noonlab/states.hpp"

namespace noonlab {

LossSweep contrast_curves(int n_photons, double n_coherent,
                          const std::vector<double>& gamma_grid) {
    if (n_photons < 1) throw parameter_error("photon number must be >= 1");
    if (n_coherent <= 0.0) {
        throw parameter_error("coherent photon number must be > 0");
    }
    if (gamma_grid.empty()) throw parameter_error("empty loss grid");
    for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
        if (gamma_grid[i] < 0.0) {
            throw parameter_error("loss exponents must be >= 0");
        }
        if (i > 0 && gamma_grid[i] <= gamma_grid[i - 1]) {
            throw parameter_error("loss grid must be strictly increasing");
        }
    }
    LossSweep sweep;
    sweep.N = n_photons;
    sweep.gammas = gamma_grid;
    for (double g : gamma_grid) {
        sweep.coherent_contrast.push_back(std::exp(-g));
        sweep.noon_contrast.push_back(std::exp(-n_photons * g));
    }
    return sweep;
}

namespace {
const std::vector<double>& contrast_grid() {
    static const std::vector<double> grid =
        linspace(0.0, 2.0 * std::numbers::pi, 241);
    return grid;
}
}  // namespace

double simulated_coherent_contrast(double n_coherent, double gamma) {
    if (n_coherent <= 0.0) {
        throw parameter_error("coherent photon number must be > 0");
    }
    CoherentSpec spec;
    spec.alpha = complex{std::sqrt(n_coherent), 0.0};
    const PureState input =
        tensor_product(make_coherent(spec), make_fock({0}));
    const Observable obs = Observable::difference();
    const FringeScan lossless =
        fringe_scan(input, contrast_grid(), 0.0, obs, false);
    const FringeScan lossy =
        fringe_scan(input, contrast_grid(), gamma, obs, false);
    return contrast_factor(lossy, lossless);
}

double simulated_noon_contrast(int n_photons, double gamma) {
    const PureState input = make_noon(n_photons);
    const Observable obs = Observable::nphoton_rate(n_photons);
    const FringeScan lossless =
        fringe_scan(input, contrast_grid(), 0.0, obs, true);
    const FringeScan lossy =
        fringe_scan(input, contrast_grid(), gamma, obs, true);
    return contrast_factor(lossy, lossless);
}

double breakeven_gamma(int n_photons) {
    if (n_photons < 2) {
        throw parameter_error("breakeven needs N >= 2; the N = 1 fringe "
                              "scales exactly like the coherent one");
    }
    const double n = static_cast<double>(n_photons);
    return std::log(n) / (n - 1.0);
}

}  // namespace noonlab
