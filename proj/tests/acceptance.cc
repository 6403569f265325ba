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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "oracle.h"
#include "pqaoa/analytic.h"
#include "pqaoa/campaign.h"
#include "pqaoa/optimize.h"
#include "pqaoa/random.h"
#include "pqaoa/simulator.h"

namespace {

using namespace pqaoa;

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, bool ok, const std::string &detail, std::chrono::steady_clock::time_point start) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] AC%d %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), secs);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c, d);
    return buf;
}

Graph random_graph(Rng &rng, std::size_t n, std::uint64_t seed) {
    for (;;) {
        Graph g;
        if (uniform_below(rng, 2) == 0 && n >= 4) {
            std::size_t k = 2 + uniform_below(rng, n - 3);
            if ((n * k) % 2 == 1) {
                k--;
            }
            g = random_regular_graph(n, k, seed);
        } else {
            g = erdos_renyi_graph(n, uniform_in(rng, 0.2, 0.9), seed);
        }
        if (g.num_edges() > 0) {
            return g;
        }
        seed++;
    }
}

double sim_value(const PhantomGraph &pg, const QaoaParams &p) {
    return expectation_of_cut(run_circuit(pg, p), CutSpectrum(pg));
}

SweepOptions sweep_options(int restarts, std::uint64_t seed) {
    SweepOptions o;
    o.restarts = restarts;
    o.seed = seed;
    o.threads = std::max(1U, std::thread::hardware_concurrency());
    return o;
}

void ac1() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(derive_seed(1, {}));
    double worst = 0.0;
    int cases = 0;
    for (int t = 0; t < 240; t++) {
        const std::size_t n = 3 + uniform_below(rng, 8);
        const Graph g = random_graph(rng, n, derive_seed(1, {std::uint64_t(t)}));
        const PhantomMethod m = uniform_below(rng, 2) == 0 ? PhantomMethod::kFull : PhantomMethod::kTriangle;
        const PhantomGraph pg = make_phantom_graph(g, m);
        const AngleTriple a{uniform_in(rng, -kPi, kPi), uniform_in(rng, -kPi / 2, kPi / 2), uniform_in(rng, -2.0, 2.0)};
        const double analytic = total_expectation_p1(pg, a);
        const double sim = sim_value(pg, {{a.gamma}, {a.beta}, a.alpha});
        worst = std::max(worst, std::abs(analytic - sim));
        cases++;
    }
    report(1, cases >= 200 && worst <= 1e-9,
           "validated analytic vs statevector: cases=" + std::to_string(cases) + fmt(" max|d|=%.3g (tol 1e-9)", worst),
           t0);
}

void ac2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail = "standard p=1 cycles:";
    const std::vector<double> grid{0.0};
    for (std::size_t n : {8U, 12U}) {
        const PhantomGraph pg(cycle_graph(n), {});
        const AlphaSweepResult s = alpha_sweep(pg, 1, grid, sweep_options(10, 2));
        const OptResult &best = s.records[0].best;
        const double ratio = best.value / double(max_cut(pg.base()));
        // Every cut of an even-degree graph is even, so gamma has period pi.
        const double g = std::abs(std::remainder(best.params.gammas[0], kPi));
        const double b = std::abs(best.params.betas[0]);
        const double at_target = sim_value(pg, {{std::copysign(kPi / 4, std::remainder(best.params.gammas[0], kPi))},
                                                {best.params.betas[0]},
                                                0.0});
        ok = ok && std::abs(at_target - best.value) <= 1e-9;
        ok = ok && std::abs(ratio - 0.75) <= 1e-6 && std::abs(g - kPi / 4) <= 1e-4 && std::abs(b - kPi / 8) <= 1e-4;
        detail += " C" + std::to_string(n) + fmt(" ratio=%.9f gamma=%.6f |gamma mod pi|=%.6f |beta|=%.6f;", ratio, best.params.gammas[0], g, b);
    }
    report(2, ok, detail + fmt(" target 0.75+-1e-6 at (%.6f, %.6f)", kPi / 4, kPi / 8), t0);
}

void ac3() {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = heawood_graph();
    const PhantomGraph pg(g, {});
    const std::vector<double> grid{0.0};
    const double ratio = alpha_sweep(pg, 1, grid, sweep_options(10, 3)).records[0].best.value / double(max_cut(g));
    // Independent maximum of the regular triangle-free edge value.
    double oracle_max = 0.0;
    for (int i = 1; i < 200000; i++) {
        oracle_max = std::max(oracle_max, oracle::regular_edge_value(3, 0.5 * kPi * i / 200000, kPi / 8));
    }
    const bool ok = std::abs(ratio - 0.6924) <= 1e-3 && std::abs(ratio - oracle_max) <= 1e-6;
    report(3, ok, fmt("Heawood standard p=1 ratio=%.6f oracle=%.6f (target 0.6924+-1e-3)", ratio, oracle_max), t0);
}

void ac4() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhantomGraph pg = triangle_method(cycle_graph(8));
    const AlphaSweepResult s = alpha_sweep(pg, 1, default_alpha_grid(), sweep_options(10, 4));
    const double ratio = s.alpha_max().best.value / 8.0;
    const double profile = cycle_alpha_profile_max(8.0).value / 8.0;
    report(4, ratio > 0.76,
           fmt("C8 triangle p=1 best ratio=%.6f at alpha=%.2f (need > 0.76; closed-form profile max %.4f, "
               "deviation %+.4f)",
               ratio, s.alpha_max().alpha, profile, ratio - 0.7925),
           t0);
}

void ac5() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhantomGraph pg = cycle_three_hop(cycle_graph(8));
    const AlphaSweepResult s = alpha_sweep(pg, 1, default_alpha_grid(), sweep_options(10, 5));
    const double best = s.alpha_max().best.value / 8.0;
    const double at_zero = s.at_alpha(0.0)->best.value / 8.0;
    const bool ok = std::abs(best - 0.75) <= 1e-4 && best - at_zero <= 1e-9;
    report(5, ok,
           fmt("C8 three-hop p=1 best ratio=%.8f ratio(alpha=0)=%.8f alpha_max=%.2f (ties allowed)", best, at_zero,
               s.alpha_max().alpha),
           t0);
}

void ac6() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhantomGraph pg = triangle_method(cycle_graph(12));
    const OptBox r = OptBox::restricted();
    const OptBox e = OptBox::extended();
    const double restricted = landscape_grid(pg, 0.7, {r.gamma_lo, r.gamma_hi, 201}, {r.beta_lo, r.beta_hi, 201}).max();
    const double extended = landscape_grid(pg, 0.7, {e.gamma_lo, e.gamma_hi, 201}, {e.beta_lo, e.beta_hi, 201}).max();
    report(6, extended > restricted && extended > 9.0,
           fmt("C12 triangle alpha=0.7 grid 201^2: restricted max=%.6f extended max=%.6f (standard optimum 9)",
               restricted, extended),
           t0);
}

void ac7() {
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentConfig c;
    c.n_min = 16;
    c.n_max = 16;
    c.degrees_by_n[16] = {4, 8, 12};
    c.graphs_per_cell = 10;
    c.methods = {PhantomMethod::kTriangle};
    c.depths = {1, 2};
    c.restarts = 10;
    c.seed = 2024;
    c.depth_one_backend = Backend::kAnalytic;
    c.threads = std::max(1U, std::thread::hardware_concurrency());
    const char *dir = std::getenv("PQAOA_ACCEPTANCE_DIR");
    const CampaignResult result = run_campaign(c, dir ? dir : "acceptance_campaign", [](const std::string &line) {
        std::fprintf(stderr, "%s\n", line.c_str());
    });
    double mod_p1_k12 = 0.0, std_p2_k12 = 0.0, imp_p1 = 0.0, imp_p2 = 0.0;
    int n_k12_1 = 0, n_k12_2 = 0, n_p1 = 0, n_p2 = 0;
    for (const CellRecord &cell : result.cells) {
        if (cell.key.depth == 1) {
            imp_p1 += cell.improvement;
            n_p1++;
            if (cell.key.k == 12) {
                mod_p1_k12 += cell.ratio_modified;
                n_k12_1++;
            }
        } else {
            imp_p2 += cell.improvement;
            n_p2++;
            if (cell.key.k == 12) {
                std_p2_k12 += cell.ratio_standard;
                n_k12_2++;
            }
        }
    }
    for (const AggregateRow &row : result.rows) {
        std::printf("  k=%zu p=%zu graphs=%zu improvement=%.4f+-%.4f alpha_max=%.3f standard=%.4f modified=%.4f\n",
                    row.k, row.depth, row.graphs, row.mean_improvement, row.std_improvement, row.mean_alpha_max,
                    row.mean_ratio_standard, row.mean_ratio_modified);
    }
    mod_p1_k12 /= std::max(1, n_k12_1);
    std_p2_k12 /= std::max(1, n_k12_2);
    imp_p1 /= std::max(1, n_p1);
    imp_p2 /= std::max(1, n_p2);
    const bool a = n_k12_1 > 0 && n_k12_2 > 0 && std::abs(mod_p1_k12 - std_p2_k12) <= 0.015;
    const bool b = imp_p1 >= 0.02 && imp_p1 <= 0.07 && imp_p2 >= 0.005 && imp_p2 <= 0.04;
    report(7, a && b && n_p1 == 30 && n_p2 == 30,
           fmt("n=16 campaign: (a) k=12 modified p=1 %.4f vs standard p=2 %.4f; (b) mean improvement p=1 %.4f "
               "p=2 %.4f",
               mod_p1_k12, std_p2_k12, imp_p1, imp_p2),
           t0);
}

void ac8() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(derive_seed(8, {}));
    double state_dev = 0.0, norm_dev = 0.0, flip_dev = 0.0, shift_dev = 0.0, neg_dev = 0.0;
    for (int t = 0; t < 60; t++) {
        const std::size_t n = 3 + uniform_below(rng, 8);
        const Graph g = random_graph(rng, n, derive_seed(8, {std::uint64_t(t)}));
        const PhantomGraph pg = make_phantom_graph(g, t % 2 ? PhantomMethod::kFull : PhantomMethod::kTriangle);
        const std::size_t p = 1 + uniform_below(rng, 3);
        QaoaParams q;
        for (std::size_t l = 0; l < p; l++) {
            q.gammas.push_back(uniform_in(rng, -kPi, kPi));
            q.betas.push_back(uniform_in(rng, -kPi / 2, kPi / 2));
        }
        const Statevector plain = run_circuit(PhantomGraph(g, {}), q);
        const Statevector zero = run_circuit(pg, q);
        q.alpha = uniform_in(rng, -1.0, 1.0);
        const Statevector mod = run_circuit(pg, q);
        const std::size_t mask = mod.size() - 1;
        for (std::size_t x = 0; x < mod.size(); x++) {
            state_dev = std::max(state_dev, std::abs(plain[x] - zero[x]));
            flip_dev = std::max(flip_dev, std::abs(mod[x] - mod[x ^ mask]));
        }
        norm_dev = std::max(norm_dev, std::abs(mod.norm_squared() - 1.0));
        QaoaParams neg = q;
        for (std::size_t l = 0; l < p; l++) {
            neg.gammas[l] = -neg.gammas[l];
            neg.betas[l] = -neg.betas[l];
        }
        neg_dev = std::max(neg_dev, std::abs(sim_value(pg, q) - sim_value(pg, neg)));
        const AngleTriple a{q.gammas[0], q.betas[0], q.alpha};
        const double base = total_expectation_p1(pg, a);
        shift_dev = std::max(shift_dev, std::abs(base - total_expectation_p1(pg, {a.gamma, a.beta + kPi / 2, a.alpha})));
        neg_dev = std::max(neg_dev, std::abs(base - total_expectation_p1(pg, {-a.gamma, -a.beta, a.alpha})));
    }
    // Depth-2 sweeps warm-started from depth 1 never fall below it.
    double p2_deficit = 0.0;
    const std::vector<double> grid = alpha_grid(0.0, 0.3, 0.1);
    for (const Graph &g : {cycle_graph(8), petersen_graph(), random_regular_graph(10, 4, 1)}) {
        const PhantomGraph pg = triangle_method(g);
        const SweepOptions o = sweep_options(4, 8);
        const AlphaSweepResult p1 = alpha_sweep(pg, 1, grid, o);
        const AlphaSweepResult p2 = p2_second_pass(pg, grid, p1, o);
        for (std::size_t i = 0; i < grid.size(); i++) {
            p2_deficit = std::max(p2_deficit, p1.records[i].best.value - p2.records[i].best.value);
        }
    }
    const bool ok = state_dev <= 1e-12 && norm_dev <= 1e-12 && flip_dev <= 1e-12 && shift_dev <= 1e-12 &&
                    neg_dev <= 1e-12 && p2_deficit <= 0.0;
    report(8, ok,
           fmt("alpha=0 state dev=%.2g norm dev=%.2g bit-flip dev=%.2g beta+pi/2 dev=%.2g", state_dev, norm_dev,
               flip_dev, shift_dev) +
               fmt(" sign-flip dev=%.2g p2 deficit=%.2g", neg_dev, p2_deficit),
           t0);
}

}  // namespace

int main() {
    ac1();
    ac2();
    ac3();
    ac4();
    ac5();
    ac6();
    ac7();
    ac8();
    std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
