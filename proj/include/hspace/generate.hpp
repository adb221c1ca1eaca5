#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hspace/hyperspace.hpp"
#include "hspace/space.hpp"

namespace hspace {

/// Seeded battery material for the verification suites and tests. All
/// generators consume a caller-owned engine so a fixed seed reproduces
/// the exact battery.

/// n points uniform in [0,1]^dim.
std::vector<std::vector<double>> random_cloud(int n, int dim, std::mt19937_64& rng);

/// Finite space from a random cloud under cutoff Euclidean distance.
/// Points are resampled until all pairwise distances exceed min_gap, so
/// batteries never hand verifiers a degenerate (near-pseudo) metric.
FiniteSpace random_finite_space(int n, int dim, std::mt19937_64& rng,
                                double min_gap = 1e-3);

/// Random convergent family over a random ambient cloud: Z_inf is a
/// random nonempty subset, Z_n shrinks toward it as points move in with
/// distance ~ decay/n. Roughly half the generated families also gain or
/// lose a point along the way, to exercise both covering conditions.
SequentialFamily random_convergent_family(int length, std::mt19937_64& rng);

/// Family that fails to converge: terms alternate between two sets a
/// fixed distance apart while the limit equals one of them.
SequentialFamily alternating_family(int length, std::mt19937_64& rng);

/// Z_n = {0, 1/n} in [0,1] with limit {0}: the second point walks into
/// the first. The continuity threshold at eps = 0.1 lands at N = 11.
/// Pass a shared 1-d coordinate space to make families comparable;
/// nullptr means a fresh private ambient.
SequentialFamily point_collapse_family(int length, SpacePtr space = nullptr);

/// Two points colliding head-on: Z_n = {-1/n, +1/n} in [-1,1], limit {0}.
SequentialFamily collision_family_two(int length, SpacePtr space = nullptr);

/// Three colliding points {-1/n, 0, +1/n} in [-1,1], same limit {0}.
SequentialFamily collision_family_three(int length, SpacePtr space = nullptr);

}  // namespace hspace
