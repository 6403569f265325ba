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

#ifndef PQAOA_SIMULATOR_H
#define PQAOA_SIMULATOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pqaoa/kernels.h"
#include "pqaoa/phantom.h"

namespace pqaoa {

// Bit convention shared by every module: basis index bit j (least significant
// bit = vertex 0) is the partition side of vertex j.

inline constexpr std::size_t kDefaultQubitLimit = 24;

/// kDefaultQubitLimit, or the value of PQAOA_MAX_QUBITS when set (capped at 30).
std::size_t qubit_limit();

/// Throws CapacityError when n is 0 or above `limit`.
void check_qubit_capacity(std::size_t n, std::size_t limit);

/// Layer angles and the phantom weight. Depth p is gammas.size().
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;
    double alpha = 0.0;

    std::size_t depth() const {
        return gammas.size();
    }
    /// Throws std::invalid_argument unless both sequences have the same length >= 1.
    void validate() const;
};

class Statevector {
   public:
    Statevector(std::size_t num_qubits, std::vector<kernels::cplx> amps);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    std::span<kernels::cplx> amplitudes() {
        return amps_;
    }
    std::span<const kernels::cplx> amplitudes() const {
        return amps_;
    }
    const kernels::cplx &operator[](std::size_t i) const {
        return amps_[i];
    }
    double norm_squared() const;

   private:
    std::size_t num_qubits_;
    std::vector<kernels::cplx> amps_;
};

/// Uniform superposition |+>^n.
Statevector initial_plus_state(std::size_t n, std::size_t limit = qubit_limit());

/// Diagonals of the base and phantom cut operators in the computational basis.
class CutSpectrum {
   public:
    explicit CutSpectrum(const PhantomGraph &pg, std::size_t limit = qubit_limit());

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_base_edges() const {
        return num_base_edges_;
    }
    std::size_t num_phantom_edges() const {
        return num_phantom_edges_;
    }
    std::span<const std::uint32_t> base_cut() const {
        return base_cut_;
    }
    std::span<const std::uint32_t> phantom_cut() const {
        return phantom_cut_;
    }
    /// base_cut as doubles, the diagonal of C.
    std::span<const double> base_weights() const {
        return base_weights_;
    }
    /// phantom_cut as doubles, the diagonal of C'.
    std::span<const double> phantom_weights() const {
        return phantom_weights_;
    }
    /// base_cut * (num_phantom_edges + 1) + phantom_cut; indexes phase tables.
    std::span<const std::uint32_t> keys() const {
        return keys_;
    }

    /// exp(-i*gamma*(c + alpha*c')) for every (c, c') pair, laid out by key.
    std::vector<kernels::cplx> phase_table(double gamma, double alpha) const;

   private:
    std::size_t num_qubits_;
    std::size_t num_base_edges_;
    std::size_t num_phantom_edges_;
    std::vector<std::uint32_t> base_cut_;
    std::vector<std::uint32_t> phantom_cut_;
    std::vector<double> base_weights_;
    std::vector<double> phantom_weights_;
    std::vector<std::uint32_t> keys_;
};

inline CutSpectrum cut_spectrum(const PhantomGraph &pg) {
    return CutSpectrum(pg);
}

/// Multiplies amplitude b by exp(-i*gamma*(base_cut[b] + alpha*phantom_cut[b])).
void apply_phase(Statevector &state, const CutSpectrum &spectrum, double gamma, double alpha);

/// Applies exp(-i*beta*X_j) to every qubit j.
void apply_mixer(Statevector &state, double beta);

/// Phase then mixer for each layer, starting from |+>^n.
Statevector run_circuit(const PhantomGraph &pg, const QaoaParams &params);

/// <C> of the original cost: sum_b |amps[b]|^2 * base_cut[b].
double expectation_of_cut(const Statevector &state, const CutSpectrum &spectrum);

/// Probability that base edge (u, v) is cut. Throws std::invalid_argument when
/// the edge is not a base edge.
double per_edge_expectation(const Statevector &state, const PhantomGraph &pg, Edge edge);

/// Reusable evaluator for repeated objective calls on one phantom graph.
/// Not thread-safe: it owns scratch states.
class CircuitEvaluator {
   public:
    explicit CircuitEvaluator(const PhantomGraph &pg, std::size_t limit = qubit_limit());

    const CutSpectrum &spectrum() const {
        return spectrum_;
    }

    double expectation(std::span<const double> gammas, std::span<const double> betas, double alpha);

    /// <C> and its exact gradient (reverse-mode through the circuit). grad_alpha
    /// may be null.
    double expectation_and_gradient(std::span<const double> gammas, std::span<const double> betas, double alpha,
                                    std::span<double> grad_gammas, std::span<double> grad_betas,
                                    double *grad_alpha = nullptr);

   private:
    void forward(std::span<const double> gammas, std::span<const double> betas, double alpha, bool keep_layers);
    void mix(std::vector<kernels::cplx> &amps, double c, double s) const;
    double mixer_overlap(const kernels::cplx *psi) const;
    double fold_factor() const;

    CutSpectrum spectrum_;
    const kernels::KernelTable &kernels_;
    bool folded_;
    std::vector<kernels::cplx> psi_;
    std::vector<kernels::cplx> lambda_;
    // Per-layer states from the last gradient evaluation: after the phase and
    // after the mixer.
    std::vector<std::vector<kernels::cplx>> phased_;
    std::vector<std::vector<kernels::cplx>> mixed_;
};

/// Inclusive, evenly spaced axis.
struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 2;

    double at(std::size_t i) const;
};

/// Depth-1 <C> on a gamma x beta grid; values are row-major by beta with gamma
/// varying fastest.
struct LandscapeGrid {
    GridAxis gamma;
    GridAxis beta;
    std::vector<double> values;

    double value(std::size_t gamma_index, std::size_t beta_index) const {
        return values[beta_index * gamma.count + gamma_index];
    }
    double max() const;
};

/// Throws std::invalid_argument when either axis has fewer than 2 points.
LandscapeGrid landscape_grid(const PhantomGraph &pg, double alpha, const GridAxis &gamma, const GridAxis &beta);

}  // namespace pqaoa

#endif
