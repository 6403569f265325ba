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

#ifndef PQAOA_KERNELS_H
#define PQAOA_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pqaoa::kernels {

using cplx = std::complex<double>;

// Inner loops of the statevector simulator. Every variant performs the same
// floating-point operations in the same order per element, and reductions use a
// fixed four-lane accumulation shape (lane = component of the pair of complex
// numbers at index 2j, 2j+1), so all variants produce bit-identical results.
//
// Amplitude arrays hold 2^num_qubits entries; num_qubits >= 1.
struct KernelTable {
    std::string_view name;

    /// amps[i] *= table[keys[i]]
    void (*phase_by_key)(cplx *amps, const std::uint32_t *keys, const cplx *table, std::size_t count);

    /// Applies exp(-i*beta*X_q) for every qubit q, given c = cos(beta), s = sin(beta).
    void (*mixer)(cplx *amps, unsigned num_qubits, double c, double s);

    /// sum_i |amps[i]|^2 * weights[i]
    double (*weighted_norm)(const cplx *amps, const double *weights, std::size_t count);

    /// sum_i Im(conj(lhs[i]) * rhs[i]) * weights[i]
    double (*diag_overlap_imag)(const cplx *lhs, const cplx *rhs, const double *weights, std::size_t count);

    /// sum_q sum_i Im(conj(lhs[i]) * rhs[i ^ (1 << q)])
    double (*mixer_overlap_imag)(const cplx *lhs, const cplx *rhs, unsigned num_qubits);

    /// amps[i] *= weights[i]
    void (*scale_real)(cplx *amps, const double *weights, std::size_t count);

    /// Rotates every pair (i, count-1-i) like one mixer qubit; count % 4 == 0.
    void (*reflect_rotation)(cplx *amps, std::size_t count, double c, double s);

    /// sum_i Im(conj(lhs[i]) * rhs[count-1-i]); count % 4 == 0.
    double (*reflect_overlap_imag)(const cplx *lhs, const cplx *rhs, std::size_t count);
};

const KernelTable &scalar_kernels();

/// AVX2 variant, or nullptr when not compiled in or not supported by this CPU.
const KernelTable *avx2_kernels();

/// Kernels used by the simulator: the fastest supported variant unless the
/// PQAOA_KERNELS environment variable names another one ("scalar", "avx2").
const KernelTable &active_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable *> available_kernels();

}  // namespace pqaoa::kernels

#endif
