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

#ifndef PQAOA_OPTIMIZE_H
#define PQAOA_OPTIMIZE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pqaoa/phantom.h"
#include "pqaoa/simulator.h"

namespace pqaoa {

/// Box on the layer angles; every gamma_i shares the gamma bounds and every
/// beta_i the beta bounds.
struct OptBox {
    double gamma_lo = 0.0;
    double gamma_hi = 0.0;
    double beta_lo = 0.0;
    double beta_hi = 0.0;

    /// gamma in [-pi, pi], beta in [-pi/4, pi/4].
    static OptBox restricted();
    /// gamma in [-2pi, 2pi], beta in [-pi/2, pi/2].
    static OptBox extended();

    /// Throws std::invalid_argument unless lo < hi on both axes.
    void validate() const;
    bool contains(std::span<const double> x, std::size_t depth) const;
};

/// Objective over x = [gamma_1..gamma_p, beta_1..beta_p]; maximized.
struct Objective {
    std::function<double(std::span<const double> x)> value;
    /// Optional exact gradient; when empty, central differences are used.
    std::function<double(std::span<const double> x, std::span<double> grad)> value_and_gradient;
};

/// One explicit starting point.
struct AngleStart {
    std::vector<double> gammas;
    std::vector<double> betas;
};

struct OptimizerOptions {
    /// Random starts drawn uniformly in the box after the explicit ones.
    int restarts = 10;
    std::uint64_t seed = 0;
    std::vector<AngleStart> starts;
    double gradient_tolerance = 1e-8;
    int max_iterations = 500;
};

struct OptResult {
    QaoaParams params;
    double value = 0.0;
    int restarts_used = 0;
    /// Index into the start list (explicit starts first) of the winning run.
    int best_restart = 0;
    std::vector<bool> converged;
};

/// Projected quasi-Newton (BFGS) ascent from every start; returns the best local
/// optimum, with ties going to the earliest start. Deterministic for a fixed
/// seed. params.alpha is left at 0 for the caller to fill in.
OptResult optimize_angles(const Objective &objective, std::size_t depth, const OptBox &box,
                          const OptimizerOptions &options);

/// Where objective values come from.
enum class Backend {
    kStatevector,
    /// Closed-form depth-1 expectation; only valid for p = 1.
    kAnalytic,
};

/// <C> of pg at fixed alpha as an Objective. The statevector backend supplies
/// exact reverse-mode gradients unless `finite_differences` is set.
Objective circuit_objective(const PhantomGraph &pg, std::size_t depth, double alpha, Backend backend,
                            bool finite_differences = false);

struct AlphaRecord {
    double alpha = 0.0;
    OptResult best;
};

struct AlphaSweepResult {
    std::size_t depth = 1;
    std::vector<AlphaRecord> records;
    std::size_t alpha_max_index = 0;
    /// best value minus the alpha = 0 value; empty when 0 is not on the grid.
    std::optional<double> improvement;

    const AlphaRecord &alpha_max() const {
        return records.at(alpha_max_index);
    }
    const AlphaRecord *at_alpha(double alpha) const;
};

struct SweepOptions {
    OptBox box = OptBox::restricted();
    int restarts = 10;
    std::uint64_t seed = 0;
    Backend backend = Backend::kStatevector;
    bool finite_differences = false;
    /// Worker threads across grid points; results do not depend on it.
    unsigned threads = 1;
};

/// Evenly spaced grid lo, lo+step, ... up to hi (inclusive within step/2).
std::vector<double> alpha_grid(double lo, double hi, double step);

/// The standard grid 0.00, 0.05, ..., 0.50.
std::vector<double> default_alpha_grid();

/// Optimizes the angles independently at each grid alpha. `warm_starts`, when
/// non-empty, holds explicit start lists per grid point.
AlphaSweepResult alpha_sweep(const PhantomGraph &pg, std::size_t depth, std::span<const double> grid,
                             const SweepOptions &options, std::span<const std::vector<AngleStart>> warm_starts = {});

/// Start list of the depth-2 pass for one grid point: the zero-second-layer
/// embedding of that point's depth-1 optimum, then every depth-1 optimum of the
/// pool duplicated into both layers.
std::vector<AngleStart> depth_two_starts(const AlphaSweepResult &depth_one, std::size_t grid_index);

/// Depth-2 sweep warm-started from every depth-1 optimum (plus the usual random
/// restarts). Throws std::invalid_argument on an empty pool or a grid mismatch.
AlphaSweepResult p2_second_pass(const PhantomGraph &pg, std::span<const double> grid,
                                const AlphaSweepResult &depth_one, const SweepOptions &options);

/// Joint optimization of (gammas, betas, alpha) with alpha boxed to
/// [alpha_lo, alpha_hi].
struct JointResult {
    QaoaParams params;
    double value = 0.0;
};
JointResult optimize_with_alpha(const PhantomGraph &pg, std::size_t depth, const SweepOptions &options,
                                double alpha_lo, double alpha_hi);

}  // namespace pqaoa

#endif
