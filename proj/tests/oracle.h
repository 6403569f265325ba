// Copyright 2026 The pqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Independent reference implementations used by the tests. They share no code
// with the library beyond the Graph container and favour clarity over speed.

#ifndef PQAOA_TESTS_ORACLE_H
#define PQAOA_TESTS_ORACLE_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pqaoa/graph.h"

namespace oracle {

using cplx = std::complex<double>;

inline int cut_of(std::uint64_t x, std::span<const pqaoa::Edge> edges) {
    int c = 0;
    for (const pqaoa::Edge &e : edges) {
        c += int(((x >> e.u) ^ (x >> e.v)) & 1U);
    }
    return c;
}

/// Dense statevector after the layered circuit, built gate by gate.
inline std::vector<cplx> circuit_state(std::size_t n, std::span<const pqaoa::Edge> base,
                                       std::span<const pqaoa::Edge> phantom, const std::vector<double> &gammas,
                                       const std::vector<double> &betas, double alpha) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cplx> psi(dim, cplx(1.0 / std::sqrt(double(dim)), 0.0));
    const cplx i_unit(0.0, 1.0);
    for (std::size_t layer = 0; layer < gammas.size(); layer++) {
        for (std::size_t x = 0; x < dim; x++) {
            const double energy = cut_of(x, base) + alpha * cut_of(x, phantom);
            psi[x] *= std::exp(-i_unit * gammas[layer] * energy);
        }
        const double c = std::cos(betas[layer]);
        const double s = std::sin(betas[layer]);
        for (std::size_t q = 0; q < n; q++) {
            std::vector<cplx> next(dim);
            for (std::size_t x = 0; x < dim; x++) {
                next[x] = c * psi[x] - i_unit * s * psi[x ^ (std::size_t{1} << q)];
            }
            psi.swap(next);
        }
    }
    return psi;
}

inline double cut_expectation(const std::vector<cplx> &psi, std::span<const pqaoa::Edge> base) {
    double total = 0.0;
    for (std::size_t x = 0; x < psi.size(); x++) {
        total += std::norm(psi[x]) * cut_of(x, base);
    }
    return total;
}

inline double expectation(const pqaoa::Graph &g, std::span<const pqaoa::Edge> phantom,
                          const std::vector<double> &gammas, const std::vector<double> &betas, double alpha) {
    return cut_expectation(circuit_state(g.num_vertices(), g.edges(), phantom, gammas, betas, alpha), g.edges());
}

/// Plain enumeration of every assignment.
inline int max_cut(const pqaoa::Graph &g) {
    int best = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.num_vertices()); x++) {
        best = std::max(best, cut_of(x, g.edges()));
    }
    return best;
}

/// Standard depth-1 value of one edge in a D-regular triangle-free graph.
inline double regular_edge_value(int degree, double gamma, double beta) {
    return 0.5 + 0.5 * std::sin(4.0 * beta) * std::sin(gamma) * std::pow(std::cos(gamma), degree - 1);
}

}  // namespace oracle

#endif
