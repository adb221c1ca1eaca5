#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hspace/finite_space.hpp"
#include "hspace/report.hpp"

namespace hspace {

/// Shared knobs for the seeded verification batteries behind `verify`.
struct SuiteOptions {
    std::uint64_t seed = 424242;
    double tol = 1e-12;          // axiom tolerance (metric suite)
    double eps = 0.1;            // covering radius (continuity/compactness)
    int spaces = 20;             // battery size
    int max_points = 8;          // ambient sizes drawn from [2, max_points]
    std::optional<FiniteSpace> extra;  // caller-provided space to include
    std::string extra_name = "provided";
};

/// Axioms of every generated space and of the full hyperspace distance
/// matrix over each (all 2^n subsets).
Report run_metric_suite(const SuiteOptions& opt);

/// Closedness of the member-pair family and the ball identity under
/// first-factor projection, exhaustively per space over an eps grid, plus
/// marked-point accumulation along convergent families.
Report run_universal_suite(const SuiteOptions& opt);

/// Covering conditions along generated convergent families (threshold
/// exists, equivalence with d_H < eps at every index), the built-in
/// collision families, and an alternating non-convergent control.
Report run_continuity_suite(const SuiteOptions& opt);

/// Greedy nets of generated spaces cover every nonempty subset of the
/// enumeration within eps.
Report run_compactness_suite(const SuiteOptions& opt);

}  // namespace hspace
