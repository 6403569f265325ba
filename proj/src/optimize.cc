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

#include "pqaoa/optimize.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "pqaoa/analytic.h"
#include "pqaoa/random.h"
#include "parallel.h"

namespace pqaoa {

OptBox OptBox::restricted() {
    const double pi = std::numbers::pi;
    return {-pi, pi, -pi / 4, pi / 4};
}

OptBox OptBox::extended() {
    const double pi = std::numbers::pi;
    return {-2 * pi, 2 * pi, -pi / 2, pi / 2};
}

void OptBox::validate() const {
    if (!(gamma_lo < gamma_hi) || !(beta_lo < beta_hi)) {
        throw std::invalid_argument("parameter box needs lo < hi on both axes");
    }
}

bool OptBox::contains(std::span<const double> x, std::size_t depth) const {
    for (std::size_t i = 0; i < x.size(); i++) {
        const bool gamma = i < depth;
        const double lo = gamma ? gamma_lo : beta_lo;
        const double hi = gamma ? gamma_hi : beta_hi;
        if (!(x[i] >= lo && x[i] <= hi)) {
            return false;
        }
    }
    return true;
}

namespace {

struct LocalResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
};

double dot(std::span<const double> a, std::span<const double> b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); i++) {
        total += a[i] * b[i];
    }
    return total;
}

double max_abs(std::span<const double> a) {
    double out = 0.0;
    for (double v : a) {
        out = std::max(out, std::abs(v));
    }
    return out;
}

class Ascent {
   public:
    static constexpr int kMaxHalvings = 20;
    // Below this projected-gradient size a failed line search means the
    // objective is flat to rounding error, so retrying is pointless.
    static constexpr double kFlatGradient = 1e-6;

    Ascent(const Objective &objective, std::vector<double> lo, std::vector<double> hi, double gtol, int max_iter)
        : objective_(objective), lo_(std::move(lo)), hi_(std::move(hi)), gtol_(gtol), max_iter_(max_iter) {}

    LocalResult run(std::vector<double> x) const {
        const std::size_t k = x.size();
        clamp(x);
        std::vector<double> g(k);
        double f = value_and_gradient(x, g);
        std::vector<double> h = identity(k);
        bool h_is_identity = true;
        std::vector<double> d(k), x_new(k), g_new(k), s(k), y(k);

        for (int iter = 0; iter < max_iter_; iter++) {
            if (projected_gradient_norm(x, g) < gtol_) {
                break;
            }
            // Ascent direction d = H g, with coordinates pinned at an active bound
            // removed.
            for (std::size_t i = 0; i < k; i++) {
                d[i] = 0.0;
                for (std::size_t j = 0; j < k; j++) {
                    d[i] += h[i * k + j] * g[j];
                }
            }
            drop_blocked(x, d);
            if (dot(g, d) <= 0.0) {
                h = identity(k);
                h_is_identity = true;
                d = g;
                drop_blocked(x, d);
            }
            const double slope = dot(g, d);
            if (slope <= 0.0) {
                break;
            }

            double t = h_is_identity ? std::min(1.0, 0.5 / max_abs(d)) : 1.0;
            bool accepted = false;
            bool have_gradient = false;
            double f_new = f;
            for (int ls = 0; ls < kMaxHalvings; ls++) {
                for (std::size_t i = 0; i < k; i++) {
                    x_new[i] = x[i] + t * d[i];
                }
                clamp(x_new);
                for (std::size_t i = 0; i < k; i++) {
                    s[i] = x_new[i] - x[i];
                }
                if (max_abs(s) < 1e-15) {
                    break;
                }
                // Full steps are usually accepted, so the first trial also
                // computes the gradient.
                have_gradient = ls == 0;
                f_new = have_gradient ? value_and_gradient(x_new, g_new) : objective_.value(x_new);
                if (f_new >= f + 1e-4 * dot(g, s)) {
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted) {
                if (h_is_identity || projected_gradient_norm(x, g) < kFlatGradient) {
                    break;
                }
                h = identity(k);
                h_is_identity = true;
                continue;
            }

            if (!have_gradient) {
                f_new = value_and_gradient(x_new, g_new);
            }
            // Curvature pair for the minimization of -f.
            for (std::size_t i = 0; i < k; i++) {
                y[i] = g[i] - g_new[i];
            }
            const double sy = dot(s, y);
            if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
                if (h_is_identity) {
                    const double scale = sy / dot(y, y);
                    for (double &v : h) {
                        v *= scale;
                    }
                }
                bfgs_update(h, s, y, sy);
                h_is_identity = false;
            }
            const bool stalled = std::abs(f_new - f) <= 1e-15 * (1.0 + std::abs(f)) && max_abs(s) < 1e-12;
            x = x_new;
            g = g_new;
            f = f_new;
            if (stalled) {
                break;
            }
        }
        LocalResult out;
        out.converged = projected_gradient_norm(x, g) < gtol_;
        out.value = f;
        out.x = std::move(x);
        return out;
    }

   private:
    static std::vector<double> identity(std::size_t k) {
        std::vector<double> h(k * k, 0.0);
        for (std::size_t i = 0; i < k; i++) {
            h[i * k + i] = 1.0;
        }
        return h;
    }

    // H <- (I - r s y^T) H (I - r y s^T) + r s s^T, r = 1 / (s.y)
    static void bfgs_update(std::vector<double> &h, std::span<const double> s, std::span<const double> y, double sy) {
        const std::size_t k = s.size();
        const double r = 1.0 / sy;
        std::vector<double> hy(k, 0.0);
        for (std::size_t i = 0; i < k; i++) {
            for (std::size_t j = 0; j < k; j++) {
                hy[i] += h[i * k + j] * y[j];
            }
        }
        const double yhy = dot(y, hy);
        for (std::size_t i = 0; i < k; i++) {
            for (std::size_t j = 0; j < k; j++) {
                h[i * k + j] += (1.0 + r * yhy) * r * s[i] * s[j] - r * (hy[i] * s[j] + s[i] * hy[j]);
            }
        }
    }

    void clamp(std::span<double> x) const {
        for (std::size_t i = 0; i < x.size(); i++) {
            x[i] = std::clamp(x[i], lo_[i], hi_[i]);
        }
    }

    void drop_blocked(std::span<const double> x, std::span<double> d) const {
        for (std::size_t i = 0; i < x.size(); i++) {
            if ((x[i] <= lo_[i] && d[i] < 0.0) || (x[i] >= hi_[i] && d[i] > 0.0)) {
                d[i] = 0.0;
            }
        }
    }

    double projected_gradient_norm(std::span<const double> x, std::span<const double> g) const {
        double out = 0.0;
        for (std::size_t i = 0; i < x.size(); i++) {
            if ((x[i] <= lo_[i] && g[i] < 0.0) || (x[i] >= hi_[i] && g[i] > 0.0)) {
                continue;
            }
            out = std::max(out, std::abs(g[i]));
        }
        return out;
    }

    double value_and_gradient(std::span<const double> x, std::span<double> g) const {
        if (objective_.value_and_gradient) {
            return objective_.value_and_gradient(x, g);
        }
        std::vector<double> probe(x.begin(), x.end());
        for (std::size_t i = 0; i < x.size(); i++) {
            const double step = std::max(1e-7, 1e-7 * std::abs(x[i]));
            probe[i] = x[i] + step;
            const double up = objective_.value(probe);
            probe[i] = x[i] - step;
            const double down = objective_.value(probe);
            probe[i] = x[i];
            g[i] = (up - down) / (2.0 * step);
        }
        return objective_.value(x);
    }

    const Objective &objective_;
    std::vector<double> lo_;
    std::vector<double> hi_;
    double gtol_;
    int max_iter_;
};

std::vector<double> flatten(const AngleStart &start, std::size_t depth) {
    if (start.gammas.size() != depth || start.betas.size() != depth) {
        throw std::invalid_argument("start point depth does not match the optimization depth");
    }
    std::vector<double> x(start.gammas);
    x.insert(x.end(), start.betas.begin(), start.betas.end());
    return x;
}

QaoaParams unflatten(std::span<const double> x, std::size_t depth) {
    QaoaParams params;
    params.gammas.assign(x.begin(), x.begin() + std::ptrdiff_t(depth));
    params.betas.assign(x.begin() + std::ptrdiff_t(depth), x.begin() + std::ptrdiff_t(2 * depth));
    return params;
}

}  // namespace

OptResult optimize_angles(const Objective &objective, std::size_t depth, const OptBox &box,
                          const OptimizerOptions &options) {
    box.validate();
    if (depth == 0) {
        throw std::invalid_argument("optimization depth must be >= 1");
    }
    const int random_starts = std::max(0, options.restarts);
    if (random_starts == 0 && options.starts.empty()) {
        throw std::invalid_argument("optimize_angles needs at least one start point");
    }
    std::vector<std::vector<double>> starts;
    for (const AngleStart &s : options.starts) {
        starts.push_back(flatten(s, depth));
    }
    for (int r = 0; r < random_starts; r++) {
        Rng rng(derive_seed(options.seed, {std::uint64_t(r)}));
        std::vector<double> x(2 * depth);
        for (std::size_t i = 0; i < depth; i++) {
            x[i] = uniform_in(rng, box.gamma_lo, box.gamma_hi);
        }
        for (std::size_t i = 0; i < depth; i++) {
            x[depth + i] = uniform_in(rng, box.beta_lo, box.beta_hi);
        }
        starts.push_back(std::move(x));
    }

    std::vector<double> lo(2 * depth), hi(2 * depth);
    for (std::size_t i = 0; i < depth; i++) {
        lo[i] = box.gamma_lo;
        hi[i] = box.gamma_hi;
        lo[depth + i] = box.beta_lo;
        hi[depth + i] = box.beta_hi;
    }
    const Ascent ascent(objective, lo, hi, options.gradient_tolerance, options.max_iterations);

    OptResult result;
    result.restarts_used = int(starts.size());
    std::vector<double> best_x;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < starts.size(); i++) {
        LocalResult local = ascent.run(starts[i]);
        result.converged.push_back(local.converged);
        if (local.value > best_value) {
            best_value = local.value;
            best_x = std::move(local.x);
            result.best_restart = int(i);
        }
    }
    result.params = unflatten(best_x, depth);
    result.value = objective.value(best_x);
    return result;
}

Objective circuit_objective(const PhantomGraph &pg, std::size_t depth, double alpha, Backend backend,
                            bool finite_differences) {
    Objective objective;
    if (backend == Backend::kAnalytic) {
        if (depth != 1) {
            throw std::invalid_argument("the analytic backend only covers depth 1");
        }
        auto graph = std::make_shared<PhantomGraph>(pg);
        objective.value = [graph, alpha](std::span<const double> x) {
            return total_expectation_p1(*graph, {x[0], x[1], alpha});
        };
        return objective;
    }
    auto evaluator = std::make_shared<CircuitEvaluator>(pg);
    objective.value = [evaluator, depth, alpha](std::span<const double> x) {
        return evaluator->expectation(x.first(depth), x.subspan(depth, depth), alpha);
    };
    if (!finite_differences) {
        objective.value_and_gradient = [evaluator, depth, alpha](std::span<const double> x, std::span<double> g) {
            return evaluator->expectation_and_gradient(x.first(depth), x.subspan(depth, depth), alpha, g.first(depth),
                                                       g.subspan(depth, depth));
        };
    }
    return objective;
}

const AlphaRecord *AlphaSweepResult::at_alpha(double alpha) const {
    for (const AlphaRecord &r : records) {
        if (std::abs(r.alpha - alpha) < 1e-12) {
            return &r;
        }
    }
    return nullptr;
}

std::vector<double> alpha_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || hi < lo) {
        throw std::invalid_argument("alpha grid needs step > 0 and hi >= lo");
    }
    std::vector<double> grid;
    const auto count = std::size_t(std::floor((hi - lo) / step + 0.5)) + 1;
    for (std::size_t i = 0; i < count; i++) {
        double a = lo + double(i) * step;
        // Snap values like 0.15000000000000002 to the nearest multiple of 1e-12.
        grid.push_back(std::round(a * 1e12) / 1e12);
    }
    return grid;
}

std::vector<double> default_alpha_grid() {
    return alpha_grid(0.0, 0.5, 0.05);
}

AlphaSweepResult alpha_sweep(const PhantomGraph &pg, std::size_t depth, std::span<const double> grid,
                             const SweepOptions &options, std::span<const std::vector<AngleStart>> warm_starts) {
    if (grid.empty()) {
        throw std::invalid_argument("alpha grid must not be empty");
    }
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("alpha grid must be sorted");
    }
    if (!warm_starts.empty() && warm_starts.size() != grid.size()) {
        throw std::invalid_argument("warm start lists must match the alpha grid");
    }
    AlphaSweepResult out;
    out.depth = depth;
    out.records.resize(grid.size());
    detail::parallel_for(grid.size(), options.threads, [&](std::size_t i) {
        const Objective objective = circuit_objective(pg, depth, grid[i], options.backend, options.finite_differences);
        OptimizerOptions opt;
        opt.restarts = options.restarts;
        opt.seed = derive_seed(options.seed, {depth});
        if (!warm_starts.empty()) {
            opt.starts = warm_starts[i];
        }
        OptResult best = optimize_angles(objective, depth, options.box, opt);
        best.params.alpha = grid[i];
        out.records[i] = AlphaRecord{grid[i], std::move(best)};
    });
    for (std::size_t i = 1; i < out.records.size(); i++) {
        if (out.records[i].best.value > out.records[out.alpha_max_index].best.value) {
            out.alpha_max_index = i;
        }
    }
    if (const AlphaRecord *zero = out.at_alpha(0.0)) {
        out.improvement = out.alpha_max().best.value - zero->best.value;
    }
    return out;
}

std::vector<AngleStart> depth_two_starts(const AlphaSweepResult &depth_one, std::size_t grid_index) {
    if (depth_one.records.empty()) {
        throw std::invalid_argument("depth-2 pass needs a non-empty depth-1 pool");
    }
    if (depth_one.depth != 1) {
        throw std::invalid_argument("depth-2 pass must be seeded from depth-1 results");
    }
    std::vector<AngleStart> starts;
    const QaoaParams &own = depth_one.records.at(grid_index).best.params;
    starts.push_back({{own.gammas[0], 0.0}, {own.betas[0], 0.0}});
    for (const AlphaRecord &r : depth_one.records) {
        const double g = r.best.params.gammas[0];
        const double b = r.best.params.betas[0];
        starts.push_back({{g, g}, {b, b}});
    }
    return starts;
}

AlphaSweepResult p2_second_pass(const PhantomGraph &pg, std::span<const double> grid,
                                const AlphaSweepResult &depth_one, const SweepOptions &options) {
    if (depth_one.records.size() != grid.size()) {
        throw std::invalid_argument("depth-1 results do not cover the alpha grid");
    }
    for (std::size_t i = 0; i < grid.size(); i++) {
        if (std::abs(depth_one.records[i].alpha - grid[i]) > 1e-12) {
            throw std::invalid_argument("depth-1 results do not cover the alpha grid");
        }
    }
    std::vector<std::vector<AngleStart>> starts;
    for (std::size_t i = 0; i < grid.size(); i++) {
        starts.push_back(depth_two_starts(depth_one, i));
    }
    return alpha_sweep(pg, 2, grid, options, starts);
}

JointResult optimize_with_alpha(const PhantomGraph &pg, std::size_t depth, const SweepOptions &options,
                                double alpha_lo, double alpha_hi) {
    options.box.validate();
    if (!(alpha_lo < alpha_hi)) {
        throw std::invalid_argument("alpha bounds need lo < hi");
    }
    auto evaluator = std::make_shared<CircuitEvaluator>(pg);
    Objective objective;
    objective.value = [evaluator, depth](std::span<const double> x) {
        return evaluator->expectation(x.first(depth), x.subspan(depth, depth), x[2 * depth]);
    };
    objective.value_and_gradient = [evaluator, depth](std::span<const double> x, std::span<double> g) {
        return evaluator->expectation_and_gradient(x.first(depth), x.subspan(depth, depth), x[2 * depth],
                                                   g.first(depth), g.subspan(depth, depth), &g[2 * depth]);
    };
    std::vector<double> lo, hi;
    for (std::size_t i = 0; i < depth; i++) {
        lo.push_back(options.box.gamma_lo);
        hi.push_back(options.box.gamma_hi);
    }
    for (std::size_t i = 0; i < depth; i++) {
        lo.push_back(options.box.beta_lo);
        hi.push_back(options.box.beta_hi);
    }
    lo.push_back(alpha_lo);
    hi.push_back(alpha_hi);
    const Ascent ascent(objective, lo, hi, 1e-8, 500);

    JointResult best;
    best.value = -std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    for (int r = 0; r < std::max(1, options.restarts); r++) {
        Rng rng(derive_seed(options.seed, {depth, 0x4A4F494EULL, std::uint64_t(r)}));
        std::vector<double> x(2 * depth + 1);
        for (std::size_t i = 0; i < x.size(); i++) {
            x[i] = uniform_in(rng, lo[i], hi[i]);
        }
        LocalResult local = ascent.run(std::move(x));
        if (local.value > best.value) {
            best.value = local.value;
            best_x = std::move(local.x);
        }
    }
    best.params = unflatten(best_x, depth);
    best.params.alpha = best_x[2 * depth];
    best.value = objective.value(best_x);
    return best;
}

}  // namespace pqaoa
