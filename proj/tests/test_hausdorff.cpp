#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hspace/hausdorff.hpp"
#include "hspace/hyperspace.hpp"
#include "hspace/space.hpp"

using namespace hspace;

namespace {

SpacePtr line() { return Space::euclid_cutoff(1); }

CompactSet on_line(const SpacePtr& s, std::initializer_list<double> xs) {
    std::vector<std::vector<double>> pts;
    for (double x : xs) pts.push_back({x});
    return CompactSet::from_coords(s, pts);
}

// Reference implementation used to cross-check the production routes:
// plain double loop, same empty-set conventions.
double brute_directed(const CompactSet& a, const CompactSet& b) {
    if (a.is_empty()) return 0.0;
    if (b.is_empty()) return 1.0;
    double sup = 0.0;
    for (const auto& p : a.members()) {
        double inf = 2.0;
        for (const auto& q : b.members())
            inf = std::min(inf, a.space()->distance(p, q));
        sup = std::max(sup, inf);
    }
    return sup;
}

double brute_hausdorff(const CompactSet& a, const CompactSet& b) {
    return std::max(brute_directed(a, b), brute_directed(b, a));
}

CompactSet random_cloud_set(const SpacePtr& s, std::mt19937& rng, int n, int dim) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (auto& c : p) c = u(rng);
    return CompactSet::from_coords(s, pts);
}

}  // namespace

TEST_CASE("empty set conventions are exact") {
    auto s = line();
    auto e = CompactSet::empty(s);
    auto b = on_line(s, {0.3, 0.7});

    CHECK(directed_hausdorff(e, b) == 0.0);
    CHECK(directed_hausdorff(b, e) == 1.0);
    CHECK(directed_hausdorff(e, e) == 0.0);
    CHECK(hausdorff_distance(e, e) == 0.0);
    CHECK(hausdorff_distance(e, b) == 1.0);
    CHECK(hausdorff_distance(b, e) == 1.0);
}

TEST_CASE("directed distances on a hand example") {
    auto s = line();
    auto a = on_line(s, {0.0, 1.0});
    auto b = on_line(s, {0.4});

    // sup over {0,1} of distance to 0.4 is 0.6; sup over {0.4} is 0.4.
    CHECK(directed_hausdorff(a, b) == doctest::Approx(0.6));
    CHECK(directed_hausdorff(b, a) == doctest::Approx(0.4));
    CHECK(hausdorff_distance(a, b) == doctest::Approx(0.6));
    CHECK(hausdorff_distance(a, b) == hausdorff_distance(b, a));
}

TEST_CASE("directed distance vanishes exactly on subsets") {
    auto s = line();
    auto sub = on_line(s, {0.1, 0.5});
    auto sup = on_line(s, {0.1, 0.3, 0.5, 0.9});

    CHECK(directed_hausdorff(sub, sup) == 0.0);
    CHECK(directed_hausdorff(sup, sub) > 0.0);
    CHECK(hausdorff_distance(sub, sup) == doctest::Approx(0.4));
}

TEST_CASE("mismatched ambient spaces are rejected") {
    auto s1 = line();
    auto s2 = line();
    auto a = on_line(s1, {0.0});
    auto b = on_line(s2, {0.0});
    CHECK_THROWS_AS(hausdorff_distance(a, b), UsageError);
}

TEST_CASE("hausdorff agrees with the reference loop on random clouds") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> size_pick(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 1 + trial % 3;
        auto s = Space::euclid_cutoff(dim);
        auto a = random_cloud_set(s, rng, size_pick(rng), dim);
        auto b = random_cloud_set(s, rng, size_pick(rng), dim);
        CHECK(hausdorff_distance(a, b) == brute_hausdorff(a, b));
    }
}

TEST_CASE("spatial index nearest queries are exact") {
    std::mt19937 rng(77);
    auto s = Space::euclid_cutoff(2);
    auto set = random_cloud_set(s, rng, 40, 2);
    SpatialIndex idx(set);
    CHECK(idx.size() == set.size());
    CHECK(idx.indexes(set));

    std::uniform_real_distribution<double> u(-0.2, 1.2);
    for (int q = 0; q < 100; ++q) {
        Point p = Point::with_coords({u(rng), u(rng)});
        double brute = set.min_distance(p);
        CHECK(idx.nearest_distance(p) == brute);

        // At-most queries: exact above the cutoff, any witness at or below.
        double cutoff = u(rng);
        double got = idx.nearest_at_most(p, cutoff);
        if (brute > cutoff) {
            CHECK(got == brute);
        } else {
            CHECK(got <= cutoff);
            CHECK(got >= brute);
        }
    }
}

TEST_CASE("fast route is bitwise equal to the plain route") {
    std::mt19937 rng(20240812);
    std::uniform_int_distribution<int> size_pick(0, 60);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 1 + trial % 3;
        auto s = Space::euclid_cutoff(dim);
        int na = trial < 4 ? trial : size_pick(rng);  // force 0..3 sized edge cases
        auto a = random_cloud_set(s, rng, na, dim);
        auto b = random_cloud_set(s, rng, size_pick(rng), dim);
        SpatialIndex ia(a), ib(b);
        double fast = hausdorff_distance_fast(a, b, ia, ib);
        CHECK(fast == hausdorff_distance(a, b));
        CHECK(fast == brute_hausdorff(a, b));
    }
}

TEST_CASE("fast route rejects stale indexes") {
    auto s = line();
    auto a = on_line(s, {0.0, 0.5});
    auto b = on_line(s, {0.25});
    auto c = on_line(s, {0.9});
    SpatialIndex ia(a), ib(b), ic(c);
    CHECK_THROWS_AS(hausdorff_distance_fast(a, b, ia, ic), UsageError);
    CHECK_THROWS_AS(hausdorff_distance_fast(a, b, ic, ib), UsageError);
    CHECK(hausdorff_distance_fast(a, b, ia, ib) == hausdorff_distance(a, b));
}

TEST_CASE("product metric takes the max of set and point distances") {
    auto s = line();
    auto za = on_line(s, {0.0, 1.0});
    auto zb = on_line(s, {0.0, 0.8});
    Point xa = Point::with_coords({0.1});
    Point xb = Point::with_coords({0.15});

    // d_H = 0.2 dominates |0.1 - 0.15| = 0.05.
    CHECK(product_metric(za, xa, zb, xb) == doctest::Approx(0.2));
    // Same sets, far points: the point distance dominates.
    CHECK(product_metric(za, xa, za, Point::with_coords({0.9})) == doctest::Approx(0.8));
}

TEST_CASE("epsilon net basics") {
    auto s = line();
    auto set = on_line(s, {0.0, 0.05, 1.0});

    auto net = epsilon_net(set, 0.1);
    REQUIRE(net.size() == 2);
    CHECK(net.member(0).coords()[0] == 0.0);
    CHECK(net.member(1).coords()[0] == 1.0);

    // eps >= diameter: the first member alone covers everything.
    CHECK(epsilon_net(set, 1.0).size() == 1);
    CHECK(epsilon_net(CompactSet::empty(s), 0.1).size() == 0);
    CHECK_THROWS_AS(epsilon_net(set, 0.0), UsageError);
    CHECK_THROWS_AS(epsilon_net(set, -0.5), UsageError);
}

TEST_CASE("epsilon net covers and separates") {
    std::mt19937 rng(20240813);
    auto s = Space::euclid_cutoff(1);
    auto set = random_cloud_set(s, rng, 100, 1);
    double eps = 0.1;
    auto net = epsilon_net(set, eps);

    // Greedy characterisation: a member joins the net exactly when every
    // earlier net point is more than eps away. Checked against the raw set.
    for (const auto& p : set.members()) {
        CHECK(net.min_distance(p) <= eps);
    }
    for (int i = 0; i < net.size(); ++i) {
        CHECK(set.contains(net.member(i)));
        for (int j = 0; j < i; ++j)
            CHECK(s->distance(net.member(i), net.member(j)) > eps);
    }
    // 100 uniform samples of [0,1]: a 0.1-separated cover needs at least 6
    // points and cannot exceed 11.
    CHECK(net.size() >= 6);
    CHECK(net.size() <= 11);
}
