#pragma once

#include <array>
#include <string>
#include <vector>

#include "hspace/quotient.hpp"
#include "hspace/report.hpp"
#include "hspace/space.hpp"

namespace hspace {

/// End-to-end reproductions of the worked examples, with the expected
/// values pinned so the CLI can print claimed vs computed.

struct LinesDemoResult {
    // d under cutoff Euclidean between sampled lines of slope 1 and 2
    double d_cutoff = 0.0;     // expected exactly 1
    std::vector<int> slopes;   // {1, 2, 4, 8, 16}
    std::vector<double> d_disk;  // distance of slope-n line to the vertical axis
    bool cutoff_exact = false;
    bool disk_decreasing = false;
    bool pass = false;
};

/// Lines through the origin: indistinguishable under the cutoff metric
/// (distance exactly 1), separated and converging to the vertical axis
/// under the disk-pullback metric as the slope grows.
LinesDemoResult demo_example1_lines();

struct HalflineDemoResult {
    QuotientApprox quotient;
    struct DomainRow {
        std::string name;
        bool stable = false;       // no jump witnesses among its samples
        bool semi_stable = false;  // reproduces the quotient classes
    };
    std::array<DomainRow, 4> table;  // [0,1], (0,1], [0,1), (0,1)
    QuotientComparison topo;         // expected mismatch (noncompact group)
    bool pass = false;               // 1 class and only the open interval stable
};

/// Scaling action on the ray, in its bounded model [0,1]. The quotient
/// collapses to a single class; of the four scaling-invariant intervals
/// only the open one is stable and semi-stable.
HalflineDemoResult demo_halfline_scaling();

struct CircleDemoResult {
    QuotientApprox quotient;
    int orbit_count = 0;
    double min_interorbit = 1.0;  // minimal d_H between distinct orbits
    QuotientComparison topo;
    bool pass = false;
};

/// Rotation by a 1/k turn on an n-point circle (k must divide n): the
/// quotient recovers the brute-force orbit partition. Defaults n=64,
/// k=4 group the sample into 16 orbits of 4 points.
CircleDemoResult demo_circle_rotation(int n = 64, int k = 4);

struct MorseDemoResult {
    QuotientApprox quotient;
    QuotientApprox refined;    // same construction at 4x the samples
    double refinement_gap = 0.0;  // max d_H between matched class sets
    bool pass = false;         // 2 classes at both resolutions, gap <= 2*eps
};

/// Downhill flow of the height function on a circle sample.
MorseDemoResult demo_morse_circle(int n = 64);

struct CollisionDemoResult {
    int threshold_two = 0;    // least index with d_H < eps, two-point family
    int threshold_three = 0;  // same for the three-point family
    double limit_gap = 1.0;   // d_H between the two limits (expected 0)
    bool pass = false;
};

/// Families of two and three colliding points: both converge to the same
/// singleton.
CollisionDemoResult demo_collision_family(double eps = 0.1, int length = 60);

}  // namespace hspace
