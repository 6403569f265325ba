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
#ifndef PQAOA_VERIFY_H
#define PQAOA_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "pqaoa/analytic.h"

namespace pqaoa {

struct VerifyOptions {
    int trials = 50;
    std::size_t n_min = 3;
    std::size_t n_max = 10;
    std::uint64_t seed = 0;
};

/// Largest |analytic - statevector| over one subset of trial cases.
struct Deviation {
    std::size_t cases = 0;
    double validated = 0.0;
    double separate_brackets = 0.0;
};

struct VerifyReport {
    Deviation all;
    /// Cases evaluated at alpha = 0.
    Deviation alpha_zero;
    /// Cases whose union graph has a triangle through at least one phantom edge.
    Deviation phantom_triangles;
    /// Cases whose union graph is triangle-free around every base edge.
    Deviation triangle_free;
};

/// Random Erdos-Renyi and regular graphs with full and triangle phantom sets
/// and random (gamma, beta, alpha); every trial also checks alpha = 0.
VerifyReport run_verification(const VerifyOptions &options);

}  // namespace pqaoa

#endif
