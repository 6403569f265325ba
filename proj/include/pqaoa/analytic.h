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

#ifndef PQAOA_ANALYTIC_H
#define PQAOA_ANALYTIC_H

#include "pqaoa/phantom.h"

namespace pqaoa {

/// Depth-1 angles plus the phantom weight.
struct AngleTriple {
    double gamma = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
};

/// How the mixed/phantom triangle contribution of the p = 1 edge expectation is
/// evaluated.
///
/// kValidated treats every common neighbor w of (u, v) as one factor in a single
/// product: the YY correlator is
///   prod_w cos(t_uw - t_vw) - prod_w cos(t_uw + t_vw)
/// with t = gamma on base edges, alpha*gamma on phantom edges and 0 otherwise.
/// It agrees with exact statevector simulation.
///
/// kSeparateBrackets sums the three triangle classes as separate bracketed terms,
/// each with its own prefactor exponents. It coincides with kValidated when
/// there are no mixed triangles and at most one of f, f_pp is nonzero; this
/// covers every triangle-free union graph and every graph without phantom edges.
enum class AnalyticMode { kValidated, kSeparateBrackets };

/// x^k by repeated squaring, with 0^0 = 1.
double int_pow(double x, unsigned k);

/// Expected cut probability of one base edge after one layer.
double edge_expectation_p1(const EdgeEnvironment &env, const AngleTriple &angles,
                           AnalyticMode mode = AnalyticMode::kValidated);

/// Triangle-free special case; throws std::invalid_argument when env has any
/// triangle.
double corollary_triangle_free(const EdgeEnvironment &env, const AngleTriple &angles);

/// Sum of edge_expectation_p1 over base edges (phantom edges never contribute).
double total_expectation_p1(const PhantomGraph &pg, const AngleTriple &angles,
                            AnalyticMode mode = AnalyticMode::kValidated);

/// Standard-ansatz optimum for a D-regular triangle-free graph with m edges.
struct RegularOptimum {
    double gamma = 0.0;
    double beta = 0.0;
    double value = 0.0;
};

/// D = 1 is the gamma -> pi/2 limit; D < 1 throws std::invalid_argument.
RegularOptimum regular_triangle_free_max(int degree, double num_edges);

/// Closed-form <C> of a triangled cycle (distance-two phantom edges) at
/// (gamma, beta) = (pi/4, pi/8) as a function of alpha:
///   m/2 + (m/4) cos^2(x) - (m/4) cos^3(x) sin(x),  x = pi*alpha/4.
double cycle_alpha_profile(double num_edges, double alpha);

struct ProfileMaximum {
    double alpha = 0.0;
    double x = 0.0;  // pi * alpha / 4, reduced to [0, pi)
    double value = 0.0;
};

/// Maximum of cycle_alpha_profile over one period, located by a dense scan and
/// refined by golden-section search.
ProfileMaximum cycle_alpha_profile_max(double num_edges);

}  // namespace pqaoa

#endif
