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
#include "pqaoa/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pqaoa/random.h"
#include "pqaoa/simulator.h"

namespace pqaoa {

namespace {

void record(Deviation &d, double validated, double bracketed, double exact) {
    d.cases++;
    d.validated = std::max(d.validated, std::abs(validated - exact));
    d.separate_brackets = std::max(d.separate_brackets, std::abs(bracketed - exact));
}

bool has_phantom_triangle(const PhantomGraph &pg) {
    for (const EdgeEnvironment &env : pg.environments()) {
        if (env.f_mixed > 0 || env.f_pp > 0) {
            return true;
        }
    }
    return false;
}

double evaluate(const PhantomGraph &pg, const AngleTriple &a) {
    QaoaParams params{{a.gamma}, {a.beta}, a.alpha};
    const Statevector psi = run_circuit(pg, params);
    return expectation_of_cut(psi, cut_spectrum(pg));
}

}  // namespace

VerifyReport run_verification(const VerifyOptions &options) {
    if (options.trials < 1 || options.n_min < 3 || options.n_min > options.n_max) {
        throw std::invalid_argument("verify needs trials >= 1 and 3 <= n_min <= n_max");
    }
    VerifyReport report;
    const double pi = std::numbers::pi;
    for (int t = 0; t < options.trials; t++) {
        Rng rng(derive_seed(options.seed, {std::uint64_t(t)}));
        const std::size_t n = options.n_min + uniform_below(rng, options.n_max - options.n_min + 1);
        Graph g = cycle_graph(3);
        if (uniform_below(rng, 2) == 0) {
            g = erdos_renyi_graph(n, uniform_in(rng, 0.2, 0.8), rng());
        } else {
            std::size_t k = 1 + uniform_below(rng, n - 1);
            if ((n * k) % 2 != 0) {
                k = k > 1 ? k - 1 : 2;
            }
            g = random_regular_graph(n, k, rng());
        }
        if (g.num_edges() == 0) {
            g = cycle_graph(n);
        }
        const PhantomMethod method = uniform_below(rng, 2) == 0 ? PhantomMethod::kFull : PhantomMethod::kTriangle;
        const PhantomGraph pg = make_phantom_graph(g, method);
        AngleTriple a{uniform_in(rng, -pi, pi), uniform_in(rng, -pi / 2, pi / 2), uniform_in(rng, -1.0, 1.0)};

        for (int pass = 0; pass < 2; pass++) {
            if (pass == 1) {
                a.alpha = 0.0;
            }
            const double exact = evaluate(pg, a);
            const double validated = total_expectation_p1(pg, a, AnalyticMode::kValidated);
            const double bracketed = total_expectation_p1(pg, a, AnalyticMode::kSeparateBrackets);
            record(report.all, validated, bracketed, exact);
            if (a.alpha == 0.0) {
                record(report.alpha_zero, validated, bracketed, exact);
            }
            if (has_phantom_triangle(pg)) {
                record(report.phantom_triangles, validated, bracketed, exact);
            }
            if (std::all_of(pg.environments().begin(), pg.environments().end(),
                            [](const EdgeEnvironment &env) { return env.triangle_free(); })) {
                record(report.triangle_free, validated, bracketed, exact);
            }
        }
    }
    return report;
}

}  // namespace pqaoa
