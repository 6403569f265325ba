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

#include "pqaoa/simulator.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace pqaoa {

using kernels::cplx;

std::size_t qubit_limit() {
    const char *env = std::getenv("PQAOA_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultQubitLimit;
    }
    char *end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
        throw std::invalid_argument("PQAOA_MAX_QUBITS must be a positive integer");
    }
    return std::min<std::size_t>(value, 30);
}

void check_qubit_capacity(std::size_t n, std::size_t limit) {
    if (n == 0) {
        throw std::invalid_argument("statevector needs at least one qubit");
    }
    if (n > limit) {
        throw CapacityError(std::to_string(n) + " qubits exceeds the simulator limit of " + std::to_string(limit) +
                            " (set PQAOA_MAX_QUBITS to raise it)");
    }
}

void QaoaParams::validate() const {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw std::invalid_argument("QAOA parameters need equal-length gamma and beta sequences of length >= 1");
    }
}

Statevector::Statevector(std::size_t num_qubits, std::vector<cplx> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    if (amps_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("statevector length must be 2^num_qubits");
    }
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const cplx &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

Statevector initial_plus_state(std::size_t n, std::size_t limit) {
    check_qubit_capacity(n, limit);
    const std::size_t dim = std::size_t{1} << n;
    const double amp = 1.0 / std::sqrt(double(dim));
    return Statevector(n, std::vector<cplx>(dim, cplx(amp, 0.0)));
}

namespace {

// Cut sizes of every basis state, via per-vertex masks of higher-numbered
// neighbors: cut(b) = sum_u popcount(upper_u & (b_u ? ~b : b)).
std::vector<std::uint32_t> cut_values(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> upper(n, 0);
    for (const Edge &e : g.edges()) {
        upper[e.u] |= std::uint64_t{1} << e.v;
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::uint32_t> out(dim);
    for (std::uint64_t b = 0; b < dim; b++) {
        std::uint32_t cut = 0;
        for (std::size_t u = 0; u < n; u++) {
            const std::uint64_t side = ((b >> u) & 1U) != 0 ? ~b : b;
            cut += std::uint32_t(std::popcount(upper[u] & side));
        }
        out[b] = cut;
    }
    return out;
}

}  // namespace

CutSpectrum::CutSpectrum(const PhantomGraph &pg, std::size_t limit)
    : num_qubits_(pg.num_vertices()),
      num_base_edges_(pg.base().num_edges()),
      num_phantom_edges_(pg.phantom_edges().size()) {
    check_qubit_capacity(num_qubits_, limit);
    base_cut_ = cut_values(pg.base());
    phantom_cut_ = cut_values(pg.phantom_graph());
    const std::size_t dim = base_cut_.size();
    base_weights_.resize(dim);
    phantom_weights_.resize(dim);
    keys_.resize(dim);
    const auto stride = std::uint32_t(num_phantom_edges_ + 1);
    for (std::size_t b = 0; b < dim; b++) {
        base_weights_[b] = double(base_cut_[b]);
        phantom_weights_[b] = double(phantom_cut_[b]);
        keys_[b] = base_cut_[b] * stride + phantom_cut_[b];
    }
}

std::vector<cplx> CutSpectrum::phase_table(double gamma, double alpha) const {
    const std::size_t stride = num_phantom_edges_ + 1;
    std::vector<cplx> phantom_phase(stride);
    for (std::size_t k = 0; k < stride; k++) {
        phantom_phase[k] = std::polar(1.0, -gamma * alpha * double(k));
    }
    std::vector<cplx> table((num_base_edges_ + 1) * stride);
    for (std::size_t c = 0; c <= num_base_edges_; c++) {
        const cplx base_phase = std::polar(1.0, -gamma * double(c));
        for (std::size_t k = 0; k < stride; k++) {
            table[c * stride + k] = base_phase * phantom_phase[k];
        }
    }
    return table;
}

namespace {

void check_dimensions(const Statevector &state, const CutSpectrum &spectrum) {
    if (state.num_qubits() != spectrum.num_qubits()) {
        throw std::invalid_argument("statevector and cut spectrum sizes differ");
    }
}

void phase_in_place(const kernels::KernelTable &k, std::span<cplx> amps, const CutSpectrum &spectrum, double gamma,
                    double alpha) {
    const auto table = spectrum.phase_table(gamma, alpha);
    k.phase_by_key(amps.data(), spectrum.keys().data(), table.data(), amps.size());
}

}  // namespace

void apply_phase(Statevector &state, const CutSpectrum &spectrum, double gamma, double alpha) {
    check_dimensions(state, spectrum);
    phase_in_place(kernels::active_kernels(), state.amplitudes(), spectrum, gamma, alpha);
}

void apply_mixer(Statevector &state, double beta) {
    kernels::active_kernels().mixer(state.amplitudes().data(), unsigned(state.num_qubits()), std::cos(beta),
                                    std::sin(beta));
}

Statevector run_circuit(const PhantomGraph &pg, const QaoaParams &params) {
    params.validate();
    CutSpectrum spectrum(pg);
    Statevector state = initial_plus_state(pg.num_vertices());
    for (std::size_t layer = 0; layer < params.depth(); layer++) {
        apply_phase(state, spectrum, params.gammas[layer], params.alpha);
        apply_mixer(state, params.betas[layer]);
    }
    return state;
}

double expectation_of_cut(const Statevector &state, const CutSpectrum &spectrum) {
    check_dimensions(state, spectrum);
    return kernels::active_kernels().weighted_norm(state.amplitudes().data(), spectrum.base_weights().data(),
                                                   state.size());
}

double per_edge_expectation(const Statevector &state, const PhantomGraph &pg, Edge edge) {
    edge = Edge::make(edge.u, edge.v);
    if (pg.base().edge_index(edge) < 0) {
        throw std::invalid_argument("(" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                                    ") is not a base edge");
    }
    if (state.num_qubits() != pg.num_vertices()) {
        throw std::invalid_argument("statevector and graph sizes differ");
    }
    double total = 0.0;
    for (std::size_t b = 0; b < state.size(); b++) {
        if (((b >> edge.u) ^ (b >> edge.v)) & 1U) {
            total += std::norm(state[b]);
        }
    }
    return total;
}

CircuitEvaluator::CircuitEvaluator(const PhantomGraph &pg, std::size_t limit)
    : spectrum_(pg, limit),
      kernels_(kernels::active_kernels()),
      folded_(spectrum_.num_qubits() >= 3),
      psi_(folded_ ? spectrum_.base_cut().size() / 2 : spectrum_.base_cut().size()),
      lambda_(psi_.size()) {}

// Every state in the circuit is invariant under flipping all qubits, so with at
// least 3 qubits only the half with the top qubit clear is stored. Its partner
// under X on the top qubit is the reflected index within that half, and full
// sums are twice the half sums.
void CircuitEvaluator::mix(std::vector<cplx> &amps, double c, double s) const {
    const auto n = unsigned(spectrum_.num_qubits());
    if (folded_) {
        kernels_.mixer(amps.data(), n - 1, c, s);
        kernels_.reflect_rotation(amps.data(), amps.size(), c, s);
    } else {
        kernels_.mixer(amps.data(), n, c, s);
    }
}

double CircuitEvaluator::mixer_overlap(const cplx *psi) const {
    const auto n = unsigned(spectrum_.num_qubits());
    if (folded_) {
        return 2.0 * (kernels_.mixer_overlap_imag(lambda_.data(), psi, n - 1) +
                      kernels_.reflect_overlap_imag(lambda_.data(), psi, lambda_.size()));
    }
    return kernels_.mixer_overlap_imag(lambda_.data(), psi, n);
}

double CircuitEvaluator::fold_factor() const {
    return folded_ ? 2.0 : 1.0;
}

void CircuitEvaluator::forward(std::span<const double> gammas, std::span<const double> betas, double alpha,
                               bool keep_layers) {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw std::invalid_argument("CircuitEvaluator: gamma and beta sequences must have equal length >= 1");
    }
    const double amp = 1.0 / std::sqrt(double(spectrum_.base_cut().size()));
    std::fill(psi_.begin(), psi_.end(), cplx(amp, 0.0));
    if (keep_layers) {
        phased_.resize(gammas.size());
        mixed_.resize(gammas.size());
    }
    for (std::size_t layer = 0; layer < gammas.size(); layer++) {
        phase_in_place(kernels_, psi_, spectrum_, gammas[layer], alpha);
        if (keep_layers) {
            phased_[layer] = psi_;
        }
        mix(psi_, std::cos(betas[layer]), std::sin(betas[layer]));
        if (keep_layers) {
            mixed_[layer] = psi_;
        }
    }
}

double CircuitEvaluator::expectation(std::span<const double> gammas, std::span<const double> betas, double alpha) {
    forward(gammas, betas, alpha, false);
    return fold_factor() * kernels_.weighted_norm(psi_.data(), spectrum_.base_weights().data(), psi_.size());
}

double CircuitEvaluator::expectation_and_gradient(std::span<const double> gammas, std::span<const double> betas,
                                                  double alpha, std::span<double> grad_gammas,
                                                  std::span<double> grad_betas, double *grad_alpha) {
    if (grad_gammas.size() != gammas.size() || grad_betas.size() != betas.size()) {
        throw std::invalid_argument("CircuitEvaluator: gradient buffers have the wrong length");
    }
    forward(gammas, betas, alpha, true);
    const std::size_t dim = psi_.size();
    const double *base_w = spectrum_.base_weights().data();
    const double *phantom_w = spectrum_.phantom_weights().data();
    const double fold = fold_factor();
    const double value = fold * kernels_.weighted_norm(psi_.data(), base_w, dim);

    // lambda carries C|psi_final> backwards through the adjoint circuit; each
    // derivative is 2 Re <lambda| (-i G) |psi> = 2 Im <lambda| G |psi> for the
    // layer generator G, with psi taken from the forward pass.
    std::copy(psi_.begin(), psi_.end(), lambda_.begin());
    kernels_.scale_real(lambda_.data(), base_w, dim);
    double d_alpha = 0.0;
    for (std::size_t layer = gammas.size(); layer-- > 0;) {
        grad_betas[layer] = 2.0 * mixer_overlap(mixed_[layer].data());
        mix(lambda_, std::cos(betas[layer]), -std::sin(betas[layer]));

        const cplx *psi = phased_[layer].data();
        const double base_overlap = fold * kernels_.diag_overlap_imag(lambda_.data(), psi, base_w, dim);
        const double phantom_overlap = fold * kernels_.diag_overlap_imag(lambda_.data(), psi, phantom_w, dim);
        grad_gammas[layer] = 2.0 * (base_overlap + alpha * phantom_overlap);
        d_alpha += 2.0 * gammas[layer] * phantom_overlap;
        if (layer > 0) {
            phase_in_place(kernels_, lambda_, spectrum_, -gammas[layer], alpha);
        }
    }
    if (grad_alpha != nullptr) {
        *grad_alpha = d_alpha;
    }
    return value;
}

double GridAxis::at(std::size_t i) const {
    if (count < 2) {
        return lo;
    }
    return lo + (hi - lo) * double(i) / double(count - 1);
}

double LandscapeGrid::max() const {
    return *std::max_element(values.begin(), values.end());
}

LandscapeGrid landscape_grid(const PhantomGraph &pg, double alpha, const GridAxis &gamma, const GridAxis &beta) {
    if (gamma.count < 2 || beta.count < 2) {
        throw std::invalid_argument("landscape grid needs at least 2 points per axis");
    }
    const CutSpectrum spectrum(pg);
    const auto &k = kernels::active_kernels();
    const auto n = unsigned(spectrum.num_qubits());
    LandscapeGrid grid{gamma, beta, std::vector<double>(gamma.count * beta.count)};
    Statevector phased = initial_plus_state(pg.num_vertices());
    const std::vector<cplx> uniform(phased.amplitudes().begin(), phased.amplitudes().end());
    std::vector<cplx> work(uniform.size());
    for (std::size_t gi = 0; gi < gamma.count; gi++) {
        std::copy(uniform.begin(), uniform.end(), phased.amplitudes().begin());
        apply_phase(phased, spectrum, gamma.at(gi), alpha);
        for (std::size_t bi = 0; bi < beta.count; bi++) {
            std::copy(phased.amplitudes().begin(), phased.amplitudes().end(), work.begin());
            const double b = beta.at(bi);
            k.mixer(work.data(), n, std::cos(b), std::sin(b));
            grid.values[bi * gamma.count + gi] = k.weighted_norm(work.data(), spectrum.base_weights().data(),
                                                                 work.size());
        }
    }
    return grid;
}

}  // namespace pqaoa
