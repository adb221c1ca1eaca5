#include "hspace/demos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hspace/errors.hpp"
#include "hspace/generate.hpp"
#include "hspace/hausdorff.hpp"

namespace hspace {

namespace {

// |t| grid for line samples: dense linear steps inside the unit ball,
// then geometric growth out to 10^4 so the disk images crowd their
// boundary points tightly enough for stable Hausdorff values.
std::vector<double> line_parameters() {
    std::vector<double> t;
    for (int k = 1; k <= 64; ++k) t.push_back(k / 64.0);
    double v = 1.0;
    while (v < 1e4) {
        v = std::min(v * 1.05, 1e4);
        t.push_back(v);
    }
    return t;
}

CompactSet sampled_line(const SpacePtr& space, double dx, double dy,
                        const std::vector<double>& ts) {
    std::vector<std::vector<double>> pts;
    pts.push_back({0.0, 0.0});
    for (double t : ts) {
        pts.push_back({dx * t, dy * t});
        pts.push_back({-dx * t, -dy * t});
    }
    return CompactSet::from_coords(space, pts);
}

}  // namespace

LinesDemoResult demo_example1_lines() {
    LinesDemoResult out;
    const auto ts = line_parameters();

    auto flat = Space::euclid_cutoff(2);
    const double d12 =
        hausdorff_distance(sampled_line(flat, 1, 1, ts), sampled_line(flat, 1, 2, ts));
    out.d_cutoff = d12;
    // Every far point of one line is at least distance 1 from the whole
    // other line, so all capped values hit 1.0 exactly.
    out.cutoff_exact = d12 == 1.0;

    auto disk = Space::disk_pullback(2);
    const CompactSet vertical = sampled_line(disk, 0, 1, ts);
    out.slopes = {1, 2, 4, 8, 16};
    for (int n : out.slopes)
        out.d_disk.push_back(
            hausdorff_distance(sampled_line(disk, 1, n, ts), vertical));

    out.disk_decreasing = true;
    for (std::size_t i = 1; i < out.d_disk.size(); ++i)
        out.disk_decreasing = out.disk_decreasing && out.d_disk[i] < out.d_disk[i - 1];

    out.pass = out.cutoff_exact && out.disk_decreasing && out.d_disk.back() < 0.2;
    return out;
}

HalflineDemoResult demo_halfline_scaling() {
    const double eps = 0.01;
    const int budget = 4096;
    const double cluster_tol = 0.2;
    const double delta = 0.06;
    const double factor = 10.0;

    auto space = Space::euclid_cutoff(1);
    std::vector<Point> samples;
    for (int k = 0; k <= 20; ++k) samples.push_back(Point::with_coords({k / 20.0}));

    GroupAction act = GroupAction::formulas(
        space, {halfline_scale(2.0), halfline_scale(0.5)}, {"double", "halve"});

    HalflineDemoResult out{
        hausdorff_quotient(samples, act, eps, budget, cluster_tol, nullptr, delta,
                           factor),
        {}, {}, false};

    struct Domain {
        const char* name;
        bool open_left, open_right;
    };
    const Domain domains[4] = {
        {"[0,1]", false, false}, {"(0,1]", true, false},
        {"[0,1)", false, true},  {"(0,1)", true, true}};
    for (int d = 0; d < 4; ++d) {
        std::vector<Point> kept;
        for (const auto& p : samples) {
            const double u = p.coords()[0];
            if (domains[d].open_left && u == 0.0) continue;
            if (domains[d].open_right && u == 1.0) continue;
            kept.push_back(p);
        }
        auto witnesses = stability_probe(kept, act, eps, budget, delta, factor);
        out.table[d].name = domains[d].name;
        out.table[d].stable = witnesses.empty();
        out.table[d].semi_stable =
            semi_stability_check(out.quotient, kept, act, eps, budget, cluster_tol);
    }

    out.topo =
        compare_topological_quotient(samples, act, out.quotient, cluster_tol, false);

    bool table_ok = true;
    for (int d = 0; d < 4; ++d) {
        const bool expect = d == 3;  // only the open interval survives scaling
        table_ok = table_ok && out.table[d].stable == expect &&
                   out.table[d].semi_stable == expect;
    }
    out.pass = out.quotient.class_count() == 1 && table_ok && !out.topo.pass;
    return out;
}

CircleDemoResult demo_circle_rotation(int n, int k) {
    if (n < 2 || k < 1 || n % k != 0)
        throw UsageError("circle rotation needs n >= 2 and k dividing n");
    const int shift = n / k;

    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * i / n;
        pts.push_back({std::cos(th), std::sin(th)});
    }
    auto space = Space::matrix(FiniteSpace::from_points(pts, BoundedMetric::euclid_cutoff()),
                               "circle-" + std::to_string(n));
    GroupAction act = GroupAction::permutation(space, {rotation_table(n, shift)},
                                               {"rot-1/" + std::to_string(k)});

    std::vector<Point> samples;
    for (int i = 0; i < n; ++i) samples.push_back(space->point(i));

    // Brute-force orbit partition straight from the permutation arithmetic,
    // independent of the orbit-closure machinery.
    std::vector<CompactSet> orbits;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> ids;
        for (int j = i; !seen[j]; j = (j + shift) % n) {
            seen[j] = true;
            ids.push_back(j);
        }
        orbits.push_back(CompactSet::from_ids(space, ids));
    }

    CircleDemoResult out{
        QuotientApprox({}, {}, "", {}, {}, {}, 0, 0, 0), 0, 1.0, {}, false};
    out.orbit_count = static_cast<int>(orbits.size());
    for (std::size_t a = 0; a < orbits.size(); ++a)
        for (std::size_t b = a + 1; b < orbits.size(); ++b)
            out.min_interorbit =
                std::min(out.min_interorbit, hausdorff_distance(orbits[a], orbits[b]));

    double min_pairwise = 2.0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            min_pairwise = std::min(min_pairwise, space->finite().dist(i, j));

    out.quotient = hausdorff_quotient(samples, act, /*eps=*/min_pairwise / 2,
                                      /*budget=*/n + 1,
                                      /*cluster_tol=*/out.min_interorbit / 2);
    out.topo = compare_topological_quotient(samples, act, out.quotient,
                                            out.min_interorbit / 2, true);
    out.pass = out.quotient.class_count() == out.orbit_count && out.topo.pass &&
               out.quotient.diagnostics().empty();
    return out;
}

namespace {

// Classes re-embedded by their coordinates so quotients over different
// sample counts (living in different Space instances) become comparable.
CompactSet reembed(const CompactSet& cls, const SpacePtr& target) {
    std::vector<std::vector<double>> pts;
    for (const auto& p : cls.members())
        pts.push_back(p.has_coords() ? p.coords() : cls.space()->finite().coords()[p.id()]);
    return CompactSet::from_coords(target, pts);
}

}  // namespace

MorseDemoResult demo_morse_circle(int n) {
    MorseDemoResult out{morse_flow_quotient(n), morse_flow_quotient(4 * n), 0.0, false};

    if (out.quotient.class_count() != 2 || out.refined.class_count() != 2) return out;

    auto flat = Space::euclid_cutoff(2);
    const CompactSet a0 = reembed(out.quotient.classes()[0], flat);
    const CompactSet a1 = reembed(out.quotient.classes()[1], flat);
    const CompactSet b0 = reembed(out.refined.classes()[0], flat);
    const CompactSet b1 = reembed(out.refined.classes()[1], flat);

    const double straight = std::max(hausdorff_distance(a0, b0), hausdorff_distance(a1, b1));
    const double crossed = std::max(hausdorff_distance(a0, b1), hausdorff_distance(a1, b0));
    out.refinement_gap = std::min(straight, crossed);

    out.pass = out.refinement_gap <= 2.0 * out.quotient.eps();
    return out;
}

CollisionDemoResult demo_collision_family(double eps, int length) {
    auto line = Space::euclid_cutoff(1);
    SequentialFamily two = collision_family_two(length, line);
    SequentialFamily three = collision_family_three(length, line);

    ContinuityResult r2 = verify_family_continuity(two, eps);
    ContinuityResult r3 = verify_family_continuity(three, eps);

    CollisionDemoResult out;
    out.threshold_two = r2.first_index;
    out.threshold_three = r3.first_index;
    out.limit_gap = hausdorff_distance(two.limit(), three.limit());
    out.pass = r2.converged && r3.converged && r2.equivalence_ok && r3.equivalence_ok &&
               out.threshold_two == out.threshold_three && out.limit_gap == 0.0;
    return out;
}

}  // namespace hspace
