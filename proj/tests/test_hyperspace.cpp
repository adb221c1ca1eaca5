#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hspace/generate.hpp"
#include "hspace/hausdorff.hpp"
#include "hspace/hyperspace.hpp"

using namespace hspace;

namespace {

FiniteSpace line_points(const std::vector<double>& xs) {
    std::vector<std::vector<double>> pts;
    for (double x : xs) pts.push_back({x});
    return FiniteSpace::from_points(pts, BoundedMetric::euclid_cutoff());
}

}  // namespace

TEST_CASE("single point hyperspace is the two-element space") {
    HSpaceEnum e(line_points({0.5}));
    REQUIRE(e.count() == 2);
    CHECK(e.element(0).is_empty());
    CHECK(e.element(1).size() == 1);
    CHECK(e.dh(0, 0) == 0.0);
    CHECK(e.dh(0, 1) == 1.0);
    CHECK(e.dh(1, 0) == 1.0);
    CHECK(e.dh(1, 1) == 0.0);

    // Degenerate but legal: zero points enumerate to just the empty set.
    HSpaceEnum empty(line_points({}));
    CHECK(empty.count() == 1);
}

TEST_CASE("two point hyperspace distances by hand") {
    // Points at 0 and 0.6. Masks: 1 = {0}, 2 = {0.6}, 3 = both.
    HSpaceEnum e(line_points({0.0, 0.6}));
    REQUIRE(e.count() == 4);
    CHECK(e.dh(1, 2) == doctest::Approx(0.6));
    CHECK(e.dh(1, 3) == doctest::Approx(0.6));
    CHECK(e.dh(2, 3) == doctest::Approx(0.6));
    CHECK(e.dh(3, 3) == 0.0);
    CHECK(e.dh(0, 3) == 1.0);
}

TEST_CASE("element masks select by bit") {
    HSpaceEnum e(line_points({0.0, 0.25, 0.5}));
    const auto& s = e.element(0b101);
    REQUIRE(s.size() == 2);
    CHECK(s.member(0).coords()[0] == 0.0);
    CHECK(s.member(1).coords()[0] == 0.5);
}

TEST_CASE("enumerated hyperspace satisfies the metric axioms") {
    std::mt19937_64 rng(20240814);
    FiniteSpace fs = random_finite_space(5, 2, rng);
    HSpaceEnum e(fs);
    REQUIRE(e.count() == 32);
    CHECK(e.dense());

    FiniteSpace h = e.as_finite_space();
    CHECK(h.size() == 32);
    CHECK(verify_metric_axioms(h, 1e-12).empty());

    // The dense matrix and the on-demand path agree.
    for (std::uint32_t a = 0; a < e.count(); ++a)
        for (std::uint32_t b = 0; b <= a; ++b)
            CHECK(h.dist(a, b) == hausdorff_distance(e.element(a), e.element(b)));
}

TEST_CASE("capacity guards") {
    std::mt19937_64 rng(9);
    CHECK_THROWS_AS(HSpaceEnum(random_finite_space(17, 1, rng)), CapacityError);

    // 12 points enumerate fine but are too big for a dense matrix.
    HSpaceEnum e(random_finite_space(12, 1, rng));
    CHECK(e.count() == 4096);
    CHECK(!e.dense());
    CHECK_THROWS_AS(e.as_finite_space(), CapacityError);
    CHECK(e.dh(1, 2) == hausdorff_distance(e.element(1), e.element(2)));
}

TEST_CASE("universal family is closed and projects openly on small batteries") {
    std::mt19937_64 rng(20240815);
    for (int trial = 0; trial < 4; ++trial) {
        HSpaceEnum e(random_finite_space(2 + trial, 1 + trial % 2, rng));
        auto u = UniversalFamily::over(e);

        Report closed = verify_universal_closed(e, u);
        CHECK(closed.all_pass());

        Report open = verify_projection_open(e, u, {0.1, 0.3, 0.7, 1.0});
        CHECK(open.all_pass());
    }
}

TEST_CASE("projection openness rejects radii outside (0, 1]") {
    std::mt19937_64 rng(3);
    HSpaceEnum e(random_finite_space(3, 1, rng));
    auto u = UniversalFamily::over(e);
    CHECK_THROWS_AS(verify_projection_open(e, u, {0.0}), UsageError);
    CHECK_THROWS_AS(verify_projection_open(e, u, {-0.2}), UsageError);
    CHECK_THROWS_AS(verify_projection_open(e, u, {1.5}), UsageError);
}

TEST_CASE("proper projection finds the accumulation point") {
    auto f = point_collapse_family(60);
    std::vector<Point> picks;
    for (int n = 1; n <= f.length(); ++n) picks.push_back(f.term(n).member(0));

    auto r = verify_projection_proper(f, picks, 0.05);
    REQUIRE(r.ok());
    REQUIRE(r.accumulation.has_value());
    CHECK(r.accumulation->coords()[0] == 0.0);
}

TEST_CASE("proper projection flags a broken hypothesis") {
    std::mt19937_64 rng(20240816);
    auto f = alternating_family(40, rng);
    std::vector<Point> picks;
    for (int n = 1; n <= f.length(); ++n) picks.push_back(f.term(n).member(0));

    auto r = verify_projection_proper(f, picks, 0.05);
    CHECK(r.status == ProperResult::Status::HypothesisFailed);
    CHECK(!r.ok());
}

TEST_CASE("proper projection distinguishes a genuine conclusion failure") {
    // Constant terms Z_n = {0, 0.5, 1}: convergence is trivial. Marked
    // points cycle through the three members, so each collects only a
    // third of the tail, short of the required half.
    auto s = Space::euclid_cutoff(1);
    std::vector<std::vector<double>> three = {{0.0}, {0.5}, {1.0}};
    std::vector<CompactSet> terms;
    std::vector<Point> picks;
    for (int n = 1; n <= 39; ++n) {
        terms.push_back(CompactSet::from_coords(s, three));
        picks.push_back(Point::with_coords({(n % 3) * 0.5}));
    }
    SequentialFamily f(std::move(terms), CompactSet::from_coords(s, three));

    auto r = verify_projection_proper(f, picks, 0.05);
    CHECK(r.status == ProperResult::Status::ConclusionFailed);

    // Exactly half the tail is enough: two members, alternating picks.
    std::vector<std::vector<double>> two = {{0.0}, {1.0}};
    std::vector<CompactSet> terms2;
    std::vector<Point> picks2;
    for (int n = 1; n <= 40; ++n) {
        terms2.push_back(CompactSet::from_coords(s, two));
        picks2.push_back(Point::with_coords({n % 2 ? 0.0 : 1.0}));
    }
    SequentialFamily g(std::move(terms2), CompactSet::from_coords(s, two));
    CHECK(verify_projection_proper(g, picks2, 0.05).ok());
}

TEST_CASE("continuity threshold for the collapsing pair lands at 11") {
    auto f = point_collapse_family(60);
    auto r = verify_family_continuity(f, 0.1);
    CHECK(r.converged);
    CHECK(r.equivalence_ok);
    // 1/n < 0.1 first holds at n = 11.
    CHECK(r.first_index == 11);
    REQUIRE(static_cast<int>(r.table.size()) == 60);
    CHECK(r.table[9].dh == doctest::Approx(0.1));   // n = 10 sits exactly at eps
    CHECK(!r.table[9].cover_into);                  // strict inequality fails there
    CHECK(r.table[10].cover_into);
    CHECK(r.table[10].cover_onto);
}

TEST_CASE("collision families converge at the same threshold") {
    auto s = Space::euclid_cutoff(1);
    auto two = verify_family_continuity(collision_family_two(60, s), 0.1);
    auto three = verify_family_continuity(collision_family_three(60, s), 0.1);
    CHECK(two.converged);
    CHECK(three.converged);
    CHECK(two.equivalence_ok);
    CHECK(three.equivalence_ok);
    CHECK(two.first_index == 11);
    CHECK(two.first_index == three.first_index);

    // Same limit {0} for both, so the limits coincide exactly.
    CHECK(hausdorff_distance(collision_family_two(60, s).limit(),
                             collision_family_three(60, s).limit()) == 0.0);
}

TEST_CASE("alternating families do not converge") {
    std::mt19937_64 rng(20240817);
    auto f = alternating_family(40, rng);
    auto r = verify_family_continuity(f, 0.1);
    CHECK(!r.converged);
    CHECK(r.first_index == -1);
    CHECK(r.residual == doctest::Approx(0.6));
    CHECK(r.equivalence_ok);  // covers still match dh pointwise
}

TEST_CASE("continuity requires eps in (0, 1]") {
    auto f = point_collapse_family(10);
    CHECK_THROWS_AS(verify_family_continuity(f, 0.0), UsageError);
    CHECK_THROWS_AS(verify_family_continuity(f, 1.0001), UsageError);
}

TEST_CASE("compactness net certificate on an eight point line") {
    std::vector<double> xs;
    for (int k = 0; k < 8; ++k) xs.push_back(k / 7.0);
    FiniteSpace fs = line_points(xs);
    HSpaceEnum e(fs);

    auto net = epsilon_net(CompactSet::from_ids(e.ambient(), {0, 1, 2, 3, 4, 5, 6, 7}),
                           0.15);
    // 255 nonempty subsets checked; the report carries violations only.
    CHECK(e.count() == 256);
    Report r = verify_compactness_net(e, 0.15, net);
    CHECK(r.all_pass());
    CHECK(r.empty());

    // A net that is just the left endpoint cannot cover subsets near 1.
    auto left = CompactSet::from_ids(e.ambient(), {0});
    CHECK(!verify_compactness_net(e, 0.15, left).all_pass());

    // At eps = 1 any single point works: every set is within cutoff reach.
    CHECK(verify_compactness_net(e, 1.0, left).all_pass());
}

TEST_CASE("compactness net rejects malformed inputs") {
    HSpaceEnum e(line_points({0.0, 0.5, 1.0}));
    auto foreign = CompactSet::from_coords(Space::euclid_cutoff(1), {{0.0}});
    CHECK_THROWS_AS(verify_compactness_net(e, 0.2, foreign), UsageError);
    CHECK_THROWS_AS(verify_compactness_net(e, 0.2, CompactSet::empty(e.ambient())),
                    UsageError);
    CHECK_THROWS_AS(
        verify_compactness_net(e, 0.0, CompactSet::from_ids(e.ambient(), {0})),
        UsageError);
}

TEST_CASE("coarser nets never fix what finer ones miss") {
    // Growing eps keeps a fixed net valid once it passes.
    std::mt19937_64 rng(20240818);
    FiniteSpace fs = random_finite_space(6, 1, rng);
    HSpaceEnum e(fs);
    auto all = CompactSet::from_ids(e.ambient(), {0, 1, 2, 3, 4, 5});

    bool passed = false;
    for (double eps : {0.05, 0.1, 0.2, 0.4, 0.8, 1.0}) {
        auto net = epsilon_net(all, eps);
        bool ok = verify_compactness_net(e, eps, net).all_pass();
        // The full sample is always a valid net for itself...
        CHECK(verify_compactness_net(e, eps, all).all_pass());
        // ...and once the greedy net passes it keeps passing.
        if (passed) CHECK(ok);
        passed = passed || ok;
    }
    CHECK(passed);
}
