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

// Reference kernels. The loop structure mirrors the vector variants lane for
// lane; keep the two in sync when changing either.

#include "kernels_internal.h"

namespace pqaoa::kernels {

namespace {

struct Lanes {
    double v[4] = {0.0, 0.0, 0.0, 0.0};

    double sum() const {
        return ((v[0] + v[1]) + v[2]) + v[3];
    }
    double alternating() const {
        return (v[0] - v[1]) + (v[2] - v[3]);
    }
};

void phase_by_key(cplx *amps, const std::uint32_t *keys, const cplx *table, std::size_t count) {
    for (std::size_t i = 0; i < count; i++) {
        const double ar = amps[i].real();
        const double ai = amps[i].imag();
        const double tr = table[keys[i]].real();
        const double ti = table[keys[i]].imag();
        amps[i] = cplx(ar * tr - ai * ti, ai * tr + ar * ti);
    }
}

inline void rotate(cplx &a, cplx &b, double c, double s) {
    const double ar = a.real();
    const double ai = a.imag();
    const double br = b.real();
    const double bi = b.imag();
    a = cplx(c * ar + s * bi, c * ai + (-s) * br);
    b = cplx(c * br + s * ai, c * bi + (-s) * ar);
}

void rotate_qubit(cplx *amps, std::size_t count, unsigned q, double c, double s) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i++) {
            rotate(amps[i], amps[i + stride], c, s);
        }
    }
}

// Qubits q and q + 1 in one sweep; each element sees the same two rotations, in
// the same order, as two single-qubit sweeps would apply.
void rotate_two_qubits(cplx *amps, std::size_t count, unsigned q, double c, double s) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < count; base += 4 * stride) {
        for (std::size_t i = base; i < base + stride; i++) {
            rotate(amps[i], amps[i + stride], c, s);
            rotate(amps[i + 2 * stride], amps[i + 3 * stride], c, s);
            rotate(amps[i], amps[i + 2 * stride], c, s);
            rotate(amps[i + stride], amps[i + 3 * stride], c, s);
        }
    }
}

void rotate_range(cplx *amps, std::size_t count, unsigned q_begin, unsigned q_end, double c, double s) {
    unsigned q = q_begin;
    if (q == 0 && q < q_end) {
        rotate_qubit(amps, count, 0, c, s);
        q = 1;
    }
    for (; q + 1 < q_end; q += 2) {
        rotate_two_qubits(amps, count, q, c, s);
    }
    if (q < q_end) {
        rotate_qubit(amps, count, q, c, s);
    }
}

void mixer(cplx *amps, unsigned num_qubits, double c, double s) {
    const std::size_t count = std::size_t{1} << num_qubits;
    const unsigned low = std::min(num_qubits, kMixerBlockQubits);
    const std::size_t block = std::size_t{1} << low;
    for (std::size_t start = 0; start < count; start += block) {
        rotate_range(amps + start, block, 0, low, c, s);
    }
    rotate_range(amps, count, low, num_qubits, c, s);
}

double weighted_norm(const cplx *amps, const double *weights, std::size_t count) {
    Lanes acc;
    for (std::size_t i = 0; i < count; i += 2) {
        const double r0 = amps[i].real();
        const double i0 = amps[i].imag();
        const double r1 = amps[i + 1].real();
        const double i1 = amps[i + 1].imag();
        acc.v[0] += (r0 * r0) * weights[i];
        acc.v[1] += (i0 * i0) * weights[i];
        acc.v[2] += (r1 * r1) * weights[i + 1];
        acc.v[3] += (i1 * i1) * weights[i + 1];
    }
    return acc.sum();
}

double diag_overlap_imag(const cplx *lhs, const cplx *rhs, const double *weights, std::size_t count) {
    Lanes acc;
    for (std::size_t i = 0; i < count; i += 2) {
        acc.v[0] += (lhs[i].real() * rhs[i].imag()) * weights[i];
        acc.v[1] += (lhs[i].imag() * rhs[i].real()) * weights[i];
        acc.v[2] += (lhs[i + 1].real() * rhs[i + 1].imag()) * weights[i + 1];
        acc.v[3] += (lhs[i + 1].imag() * rhs[i + 1].real()) * weights[i + 1];
    }
    return acc.alternating();
}

void pair_overlap(Lanes &acc, const cplx *lhs, const cplx *rhs, std::size_t count, unsigned q) {
    const std::size_t stride = std::size_t{1} << q;
    if (q == 0) {
        for (std::size_t i = 0; i < count; i += 2) {
            acc.v[0] += lhs[i].real() * rhs[i + 1].imag();
            acc.v[1] += lhs[i].imag() * rhs[i + 1].real();
            acc.v[2] += lhs[i + 1].real() * rhs[i].imag();
            acc.v[3] += lhs[i + 1].imag() * rhs[i].real();
        }
        return;
    }
    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            const std::size_t j = i + stride;
            acc.v[0] += lhs[i].real() * rhs[j].imag() + lhs[j].real() * rhs[i].imag();
            acc.v[1] += lhs[i].imag() * rhs[j].real() + lhs[j].imag() * rhs[i].real();
            acc.v[2] += lhs[i + 1].real() * rhs[j + 1].imag() + lhs[j + 1].real() * rhs[i + 1].imag();
            acc.v[3] += lhs[i + 1].imag() * rhs[j + 1].real() + lhs[j + 1].imag() * rhs[i + 1].real();
        }
    }
}

// Visits each (i, i ^ bit) pair once, blocked like the mixer.
double mixer_overlap_imag(const cplx *lhs, const cplx *rhs, unsigned num_qubits) {
    const std::size_t count = std::size_t{1} << num_qubits;
    const unsigned low = std::min(num_qubits, kMixerBlockQubits);
    const std::size_t block = std::size_t{1} << low;
    Lanes acc;
    for (std::size_t start = 0; start < count; start += block) {
        for (unsigned q = 0; q < low; q++) {
            pair_overlap(acc, lhs + start, rhs + start, block, q);
        }
    }
    for (unsigned q = low; q < num_qubits; q++) {
        pair_overlap(acc, lhs, rhs, count, q);
    }
    return acc.alternating();
}

void scale_real(cplx *amps, const double *weights, std::size_t count) {
    for (std::size_t i = 0; i < count; i++) {
        amps[i] = cplx(amps[i].real() * weights[i], amps[i].imag() * weights[i]);
    }
}

void reflect_rotation(cplx *amps, std::size_t count, double c, double s) {
    for (std::size_t i = 0; i < count / 2; i++) {
        rotate(amps[i], amps[count - 1 - i], c, s);
    }
}

double reflect_overlap_imag(const cplx *lhs, const cplx *rhs, std::size_t count) {
    Lanes acc;
    for (std::size_t i = 0; i < count; i += 2) {
        const cplx &p0 = rhs[count - 1 - i];
        const cplx &p1 = rhs[count - 2 - i];
        acc.v[0] += lhs[i].real() * p0.imag();
        acc.v[1] += lhs[i].imag() * p0.real();
        acc.v[2] += lhs[i + 1].real() * p1.imag();
        acc.v[3] += lhs[i + 1].imag() * p1.real();
    }
    return acc.alternating();
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{
        "scalar", phase_by_key, mixer, weighted_norm, diag_overlap_imag, mixer_overlap_imag, scale_real,
        reflect_rotation, reflect_overlap_imag,
    };
    return table;
}

}  // namespace pqaoa::kernels
