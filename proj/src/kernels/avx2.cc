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

#ifndef __AVX2__
#error "this should be compiled with AVX2"
#endif

#include <immintrin.h>

#include "kernels_internal.h"

namespace pqaoa::kernels {

namespace {

// One __m256d holds two complex numbers: [re0, im0, re1, im1].

inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_re_im(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

// [re0, im0, re1, im1] -> [im1, re1, im0, re0]
inline __m256d swap_pairs_re_im(__m256d v) {
    return _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 1, 2, 3));
}

inline double lanes_sum(__m256d acc) {
    alignas(32) double v[4];
    _mm256_store_pd(v, acc);
    return ((v[0] + v[1]) + v[2]) + v[3];
}

inline double lanes_alternating(__m256d acc) {
    alignas(32) double v[4];
    _mm256_store_pd(v, acc);
    return (v[0] - v[1]) + (v[2] - v[3]);
}

// Weights w0, w1 broadcast as [w0, w0, w1, w1].
inline __m256d load_weight_pair(const double *w) {
    __m128d pair = _mm_loadu_pd(w);
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(pair), _MM_SHUFFLE(1, 1, 0, 0));
}

void phase_by_key(cplx *amps, const std::uint32_t *keys, const cplx *table, std::size_t count) {
    for (std::size_t i = 0; i < count; i += 2) {
        __m256d a = load2(amps + i);
        __m128d t0 = _mm_loadu_pd(reinterpret_cast<const double *>(table + keys[i]));
        __m128d t1 = _mm_loadu_pd(reinterpret_cast<const double *>(table + keys[i + 1]));
        __m256d t = _mm256_insertf128_pd(_mm256_castpd128_pd256(t0), t1, 1);
        __m256d t_re = _mm256_movedup_pd(t);        // [tr0, tr0, tr1, tr1]
        __m256d t_im = _mm256_permute_pd(t, 0b1111);  // [ti0, ti0, ti1, ti1]
        __m256d prod_re = _mm256_mul_pd(a, t_re);
        __m256d prod_im = _mm256_mul_pd(swap_re_im(a), t_im);
        store2(amps + i, _mm256_addsub_pd(prod_re, prod_im));
    }
}

void rotate_qubit0(cplx *amps, std::size_t count, __m256d c, __m256d s) {
    for (std::size_t i = 0; i < count; i += 2) {
        __m256d v = load2(amps + i);
        __m256d cross = _mm256_mul_pd(s, swap_pairs_re_im(v));
        store2(amps + i, _mm256_add_pd(_mm256_mul_pd(c, v), cross));
    }
}

void rotate_qubit(cplx *amps, std::size_t count, unsigned q, __m256d c, __m256d s) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            __m256d a = load2(amps + i);
            __m256d b = load2(amps + i + stride);
            __m256d na = _mm256_add_pd(_mm256_mul_pd(c, a), _mm256_mul_pd(s, swap_re_im(b)));
            __m256d nb = _mm256_add_pd(_mm256_mul_pd(c, b), _mm256_mul_pd(s, swap_re_im(a)));
            store2(amps + i, na);
            store2(amps + i + stride, nb);
        }
    }
}

void rotate_two_qubits(cplx *amps, std::size_t count, unsigned q, __m256d c, __m256d s) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < count; base += 4 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            __m256d a0 = load2(amps + i);
            __m256d a1 = load2(amps + i + stride);
            __m256d a2 = load2(amps + i + 2 * stride);
            __m256d a3 = load2(amps + i + 3 * stride);
            __m256d b0 = _mm256_add_pd(_mm256_mul_pd(c, a0), _mm256_mul_pd(s, swap_re_im(a1)));
            __m256d b1 = _mm256_add_pd(_mm256_mul_pd(c, a1), _mm256_mul_pd(s, swap_re_im(a0)));
            __m256d b2 = _mm256_add_pd(_mm256_mul_pd(c, a2), _mm256_mul_pd(s, swap_re_im(a3)));
            __m256d b3 = _mm256_add_pd(_mm256_mul_pd(c, a3), _mm256_mul_pd(s, swap_re_im(a2)));
            store2(amps + i, _mm256_add_pd(_mm256_mul_pd(c, b0), _mm256_mul_pd(s, swap_re_im(b2))));
            store2(amps + i + 2 * stride, _mm256_add_pd(_mm256_mul_pd(c, b2), _mm256_mul_pd(s, swap_re_im(b0))));
            store2(amps + i + stride, _mm256_add_pd(_mm256_mul_pd(c, b1), _mm256_mul_pd(s, swap_re_im(b3))));
            store2(amps + i + 3 * stride, _mm256_add_pd(_mm256_mul_pd(c, b3), _mm256_mul_pd(s, swap_re_im(b1))));
        }
    }
}

void rotate_range(cplx *amps, std::size_t count, unsigned q_begin, unsigned q_end, __m256d c, __m256d s) {
    unsigned q = q_begin;
    if (q == 0 && q < q_end) {
        rotate_qubit0(amps, count, c, s);
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
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_setr_pd(s, -s, s, -s);
    const std::size_t count = std::size_t{1} << num_qubits;
    const unsigned low = std::min(num_qubits, kMixerBlockQubits);
    const std::size_t block = std::size_t{1} << low;
    for (std::size_t start = 0; start < count; start += block) {
        rotate_range(amps + start, block, 0, low, vc, vs);
    }
    rotate_range(amps, count, low, num_qubits, vc, vs);
}

double weighted_norm(const cplx *amps, const double *weights, std::size_t count) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < count; i += 2) {
        __m256d a = load2(amps + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(a, a), load_weight_pair(weights + i)));
    }
    return lanes_sum(acc);
}

double diag_overlap_imag(const cplx *lhs, const cplx *rhs, const double *weights, std::size_t count) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < count; i += 2) {
        __m256d prod = _mm256_mul_pd(load2(lhs + i), swap_re_im(load2(rhs + i)));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(prod, load_weight_pair(weights + i)));
    }
    return lanes_alternating(acc);
}

void pair_overlap(__m256d &acc, const cplx *lhs, const cplx *rhs, std::size_t count, unsigned q) {
    const std::size_t stride = std::size_t{1} << q;
    if (q == 0) {
        for (std::size_t i = 0; i < count; i += 2) {
            acc = _mm256_add_pd(acc, _mm256_mul_pd(load2(lhs + i), swap_pairs_re_im(load2(rhs + i))));
        }
        return;
    }
    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            const std::size_t j = i + stride;
            __m256d forward = _mm256_mul_pd(load2(lhs + i), swap_re_im(load2(rhs + j)));
            __m256d backward = _mm256_mul_pd(load2(lhs + j), swap_re_im(load2(rhs + i)));
            acc = _mm256_add_pd(acc, _mm256_add_pd(forward, backward));
        }
    }
}

double mixer_overlap_imag(const cplx *lhs, const cplx *rhs, unsigned num_qubits) {
    const std::size_t count = std::size_t{1} << num_qubits;
    const unsigned low = std::min(num_qubits, kMixerBlockQubits);
    const std::size_t block = std::size_t{1} << low;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t start = 0; start < count; start += block) {
        for (unsigned q = 0; q < low; q++) {
            pair_overlap(acc, lhs + start, rhs + start, block, q);
        }
    }
    for (unsigned q = low; q < num_qubits; q++) {
        pair_overlap(acc, lhs, rhs, count, q);
    }
    return lanes_alternating(acc);
}

void scale_real(cplx *amps, const double *weights, std::size_t count) {
    for (std::size_t i = 0; i < count; i += 2) {
        store2(amps + i, _mm256_mul_pd(load2(amps + i), load_weight_pair(weights + i)));
    }
}

// [x0, x1] -> [x1, x0] as whole complex numbers.
inline __m256d swap_pairs(__m256d v) {
    return _mm256_permute2f128_pd(v, v, 1);
}

void reflect_rotation(cplx *amps, std::size_t count, double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_setr_pd(s, -s, s, -s);
    for (std::size_t i = 0; i < count / 2; i += 2) {
        cplx *mirror = amps + (count - 2 - i);
        __m256d a = load2(amps + i);
        __m256d b = swap_pairs(load2(mirror));
        __m256d na = _mm256_add_pd(_mm256_mul_pd(vc, a), _mm256_mul_pd(vs, swap_re_im(b)));
        __m256d nb = _mm256_add_pd(_mm256_mul_pd(vc, b), _mm256_mul_pd(vs, swap_re_im(a)));
        store2(amps + i, na);
        store2(mirror, swap_pairs(nb));
    }
}

double reflect_overlap_imag(const cplx *lhs, const cplx *rhs, std::size_t count) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < count; i += 2) {
        __m256d partner = swap_pairs_re_im(load2(rhs + (count - 2 - i)));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(load2(lhs + i), partner));
    }
    return lanes_alternating(acc);
}

}  // namespace

const KernelTable &avx2_kernel_table() {
    static const KernelTable table{
        "avx2", phase_by_key, mixer, weighted_norm, diag_overlap_imag, mixer_overlap_imag, scale_real,
        reflect_rotation, reflect_overlap_imag,
    };
    return table;
}

}  // namespace pqaoa::kernels
