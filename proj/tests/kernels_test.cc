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
#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstring>

#include "pqaoa/kernels.h"
#include "pqaoa/random.h"

namespace pqaoa::kernels {
namespace {

std::vector<cplx> random_amps(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cplx> out(count);
    for (cplx &a : out) {
        a = {uniform_in(rng, -1.0, 1.0), uniform_in(rng, -1.0, 1.0)};
    }
    return out;
}

std::vector<double> random_weights(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(count);
    for (double &w : out) {
        w = double(uniform_below(rng, 9)) - 2.0;
    }
    return out;
}

bool bit_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool bit_equal(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

std::vector<cplx> naive_mixer(std::vector<cplx> psi, unsigned n, double c, double s) {
    const cplx minus_i(0.0, -1.0);
    for (unsigned q = 0; q < n; q++) {
        std::vector<cplx> next(psi.size());
        for (std::size_t x = 0; x < psi.size(); x++) {
            next[x] = c * psi[x] + minus_i * s * psi[x ^ (std::size_t{1} << q)];
        }
        psi.swap(next);
    }
    return psi;
}

class KernelVariantTest : public ::testing::TestWithParam<const KernelTable *> {};

TEST_P(KernelVariantTest, MixerMatchesNaiveRotation) {
    const KernelTable &k = *GetParam();
    for (unsigned n : {1U, 2U, 3U, 5U, 12U, 13U}) {
        const double beta = 0.37 + 0.1 * n;
        std::vector<cplx> amps = random_amps(std::size_t{1} << n, n);
        const std::vector<cplx> expected = naive_mixer(amps, n, std::cos(beta), std::sin(beta));
        k.mixer(amps.data(), n, std::cos(beta), std::sin(beta));
        for (std::size_t i = 0; i < amps.size(); i++) {
            ASSERT_NEAR(std::abs(amps[i] - expected[i]), 0.0, 1e-12) << "n=" << n << " i=" << i;
        }
    }
}

TEST_P(KernelVariantTest, BitIdenticalToScalar) {
    const KernelTable &k = *GetParam();
    const KernelTable &ref = scalar_kernels();
    for (unsigned n : {2U, 3U, 4U, 7U, 11U, 12U, 14U}) {
        const std::size_t dim = std::size_t{1} << n;
        const std::vector<cplx> lhs = random_amps(dim, 100 + n);
        const std::vector<cplx> rhs = random_amps(dim, 200 + n);
        const std::vector<double> w = random_weights(dim, 300 + n);
        std::vector<std::uint32_t> keys(dim);
        for (std::size_t i = 0; i < dim; i++) {
            keys[i] = std::uint32_t(i % 37);
        }
        const std::vector<cplx> table = random_amps(37, 400 + n);

        auto a = lhs;
        auto b = lhs;
        k.phase_by_key(a.data(), keys.data(), table.data(), dim);
        ref.phase_by_key(b.data(), keys.data(), table.data(), dim);
        EXPECT_TRUE(bit_equal(a, b)) << "phase_by_key n=" << n;

        a = lhs;
        b = lhs;
        k.mixer(a.data(), n, std::cos(0.3), std::sin(0.3));
        ref.mixer(b.data(), n, std::cos(0.3), std::sin(0.3));
        EXPECT_TRUE(bit_equal(a, b)) << "mixer n=" << n;

        a = lhs;
        b = lhs;
        k.scale_real(a.data(), w.data(), dim);
        ref.scale_real(b.data(), w.data(), dim);
        EXPECT_TRUE(bit_equal(a, b)) << "scale_real n=" << n;

        a = lhs;
        b = lhs;
        k.reflect_rotation(a.data(), dim, std::cos(-0.8), std::sin(-0.8));
        ref.reflect_rotation(b.data(), dim, std::cos(-0.8), std::sin(-0.8));
        EXPECT_TRUE(bit_equal(a, b)) << "reflect_rotation n=" << n;

        EXPECT_TRUE(bit_equal(k.weighted_norm(lhs.data(), w.data(), dim), ref.weighted_norm(lhs.data(), w.data(), dim)));
        EXPECT_TRUE(bit_equal(k.diag_overlap_imag(lhs.data(), rhs.data(), w.data(), dim),
                              ref.diag_overlap_imag(lhs.data(), rhs.data(), w.data(), dim)));
        EXPECT_TRUE(bit_equal(k.mixer_overlap_imag(lhs.data(), rhs.data(), n),
                              ref.mixer_overlap_imag(lhs.data(), rhs.data(), n)));
        EXPECT_TRUE(bit_equal(k.reflect_overlap_imag(lhs.data(), rhs.data(), dim),
                              ref.reflect_overlap_imag(lhs.data(), rhs.data(), dim)));
    }
}

TEST_P(KernelVariantTest, ReductionsMatchDefinitions) {
    const KernelTable &k = *GetParam();
    const unsigned n = 6;
    const std::size_t dim = std::size_t{1} << n;
    const std::vector<cplx> lhs = random_amps(dim, 7);
    const std::vector<cplx> rhs = random_amps(dim, 8);
    const std::vector<double> w = random_weights(dim, 9);
    double norm = 0.0;
    double diag = 0.0;
    double mix = 0.0;
    double refl = 0.0;
    for (std::size_t i = 0; i < dim; i++) {
        norm += std::norm(lhs[i]) * w[i];
        diag += (std::conj(lhs[i]) * rhs[i]).imag() * w[i];
        refl += (std::conj(lhs[i]) * rhs[dim - 1 - i]).imag();
        for (unsigned q = 0; q < n; q++) {
            mix += (std::conj(lhs[i]) * rhs[i ^ (std::size_t{1} << q)]).imag();
        }
    }
    EXPECT_NEAR(k.weighted_norm(lhs.data(), w.data(), dim), norm, 1e-12);
    EXPECT_NEAR(k.diag_overlap_imag(lhs.data(), rhs.data(), w.data(), dim), diag, 1e-12);
    EXPECT_NEAR(k.mixer_overlap_imag(lhs.data(), rhs.data(), n), mix, 1e-12);
    EXPECT_NEAR(k.reflect_overlap_imag(lhs.data(), rhs.data(), dim), refl, 1e-12);

    std::vector<cplx> rotated = lhs;
    k.reflect_rotation(rotated.data(), dim, std::cos(0.4), std::sin(0.4));
    const cplx minus_i(0.0, -1.0);
    for (std::size_t i = 0; i < dim; i++) {
        const cplx expected = std::cos(0.4) * lhs[i] + minus_i * std::sin(0.4) * lhs[dim - 1 - i];
        EXPECT_NEAR(std::abs(rotated[i] - expected), 0.0, 1e-14);
    }
}

std::string variant_name(const ::testing::TestParamInfo<const KernelTable *> &info) {
    return std::string(info.param->name);
}

INSTANTIATE_TEST_SUITE_P(AllVariants, KernelVariantTest, ::testing::ValuesIn(available_kernels()), variant_name);

TEST(KernelDispatchTest, ScalarAlwaysAvailable) {
    const auto all = available_kernels();
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front(), &scalar_kernels());
    bool found_active = false;
    for (const KernelTable *k : all) {
        found_active = found_active || k == &active_kernels();
    }
    EXPECT_TRUE(found_active);
}

}  // namespace
}  // namespace pqaoa::kernels
