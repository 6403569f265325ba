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

#include "pqaoa/analytic.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pqaoa {

double int_pow(double x, unsigned k) {
    double result = 1.0;
    while (k != 0) {
        if (k & 1U) {
            result *= x;
        }
        x *= x;
        k >>= 1U;
    }
    return result;
}

namespace {

unsigned exponent(int k) {
    if (k < 0) {
        throw std::logic_error("edge environment produced a negative exponent");
    }
    return unsigned(k);
}

// sin(4b)/4 * sin(g) * (cos^d g cos^d' ag + cos^e g cos^e' ag)
double linear_term(const EdgeEnvironment &env, double cg, double sg, double ca, double beta) {
    const double u_side = int_pow(cg, exponent(env.d)) * int_pow(ca, exponent(env.d_p));
    const double v_side = int_pow(cg, exponent(env.e)) * int_pow(ca, exponent(env.e_p));
    return std::sin(4.0 * beta) / 4.0 * sg * (u_side + v_side);
}

double yy_validated(const EdgeEnvironment &env, const AngleTriple &a) {
    const double g = a.gamma;
    const double ag = a.alpha * a.gamma;
    const double lone = int_pow(std::cos(g), exponent(env.d + env.e - 2 * env.f - env.f_mixed)) *
                        int_pow(std::cos(ag), exponent(env.d_p + env.e_p - 2 * env.f_pp - env.f_mixed));
    const double diff = int_pow(std::cos(g - ag), exponent(env.f_mixed));
    const double sum = int_pow(std::cos(2.0 * g), exponent(env.f)) * int_pow(std::cos(g + ag), exponent(env.f_mixed)) *
                       int_pow(std::cos(2.0 * ag), exponent(env.f_pp));
    return lone * (diff - sum);
}

double yy_separate_brackets(const EdgeEnvironment &env, const AngleTriple &a) {
    const double cg = std::cos(a.gamma);
    const double sg = std::sin(a.gamma);
    const double ca = std::cos(a.alpha * a.gamma);
    const double sa = std::sin(a.alpha * a.gamma);
    const int de = env.d + env.e;
    const int dep = env.d_p + env.e_p;
    const double base_triangles = int_pow(cg, exponent(de - 2 * env.f)) * int_pow(ca, exponent(dep)) *
                                  (1.0 - int_pow(std::cos(2.0 * a.gamma), exponent(env.f)));
    const double mixed_triangles =
        int_pow(cg, exponent(de - env.f_mixed)) * int_pow(ca, exponent(dep - env.f_mixed)) * 0.5 *
        (int_pow(cg * ca + sg * sa, exponent(env.f_mixed)) - int_pow(cg * ca - sg * sa, exponent(env.f_mixed)));
    const double phantom_triangles = int_pow(cg, exponent(de)) * int_pow(ca, exponent(dep - 2 * env.f_pp)) *
                                     (1.0 - int_pow(std::cos(2.0 * a.alpha * a.gamma), exponent(env.f_pp)));
    return base_triangles + mixed_triangles + phantom_triangles;
}

}  // namespace

double edge_expectation_p1(const EdgeEnvironment &env, const AngleTriple &angles, AnalyticMode mode) {
    const double cg = std::cos(angles.gamma);
    const double sg = std::sin(angles.gamma);
    const double ca = std::cos(angles.alpha * angles.gamma);
    const double s2b = std::sin(2.0 * angles.beta);
    const double yy = mode == AnalyticMode::kValidated ? yy_validated(env, angles) : yy_separate_brackets(env, angles);
    return 0.5 + linear_term(env, cg, sg, ca, angles.beta) - s2b * s2b / 4.0 * yy;
}

double corollary_triangle_free(const EdgeEnvironment &env, const AngleTriple &angles) {
    if (!env.triangle_free()) {
        throw std::invalid_argument("corollary_triangle_free: environment contains triangles");
    }
    return 0.5 + linear_term(env, std::cos(angles.gamma), std::sin(angles.gamma), std::cos(angles.alpha * angles.gamma),
                             angles.beta);
}

double total_expectation_p1(const PhantomGraph &pg, const AngleTriple &angles, AnalyticMode mode) {
    double total = 0.0;
    for (const EdgeEnvironment &env : pg.environments()) {
        total += edge_expectation_p1(env, angles, mode);
    }
    return total;
}

RegularOptimum regular_triangle_free_max(int degree, double num_edges) {
    if (degree < 1) {
        throw std::invalid_argument("regular_triangle_free_max: degree must be >= 1");
    }
    const double D = degree;
    RegularOptimum out;
    out.gamma = degree == 1 ? std::numbers::pi / 2 : std::atan(1.0 / std::sqrt(D - 1.0));
    out.beta = std::numbers::pi / 8;
    const double ratio_term = degree == 1 ? 1.0 : std::pow((D - 1.0) / D, (D - 1.0) / 2.0);
    out.value = num_edges / 2.0 + num_edges / 2.0 / std::sqrt(D) * ratio_term;
    return out;
}

double cycle_alpha_profile(double num_edges, double alpha) {
    const double x = std::numbers::pi * alpha / 4.0;
    const double c = std::cos(x);
    const double s = std::sin(x);
    return num_edges / 2.0 + num_edges / 4.0 * c * c - num_edges / 4.0 * c * c * c * s;
}

ProfileMaximum cycle_alpha_profile_max(double num_edges) {
    // The profile has period pi in x.
    constexpr int kScan = 4096;
    const double pi = std::numbers::pi;
    auto at_x = [&](double x) {
        return cycle_alpha_profile(1.0, 4.0 * x / pi);
    };
    int best = 0;
    double best_value = at_x(0.0);
    for (int i = 1; i < kScan; i++) {
        double v = at_x(pi * i / kScan);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    double lo = pi * (best - 1) / kScan;
    double hi = pi * (best + 1) / kScan;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int iter = 0; iter < 100 && hi - lo > 1e-15; iter++) {
        double x1 = hi - ratio * (hi - lo);
        double x2 = lo + ratio * (hi - lo);
        if (at_x(x1) < at_x(x2)) {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    ProfileMaximum out;
    out.x = std::fmod(0.5 * (lo + hi) + pi, pi);
    out.alpha = 4.0 * out.x / pi;
    out.value = cycle_alpha_profile(num_edges, out.alpha);
    return out;
}

}  // namespace pqaoa
