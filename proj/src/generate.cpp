#include "hspace/generate.hpp"

#include <cmath>
#include <numbers>

#include "hspace/errors.hpp"

namespace hspace {

std::vector<std::vector<double>> random_cloud(int n, int dim, std::mt19937_64& rng) {
    if (n < 0 || dim < 1) throw UsageError("random_cloud: need n >= 0, dim >= 1");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> out(n, std::vector<double>(dim));
    for (auto& p : out)
        for (auto& c : p) c = unit(rng);
    return out;
}

FiniteSpace random_finite_space(int n, int dim, std::mt19937_64& rng, double min_gap) {
    const BoundedMetric metric = BoundedMetric::euclid_cutoff();
    for (int attempt = 0; attempt < 256; ++attempt) {
        auto cloud = random_cloud(n, dim, rng);
        FiniteSpace s = FiniteSpace::from_points(cloud, metric);
        double gap = 2.0;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) gap = std::min(gap, s.dist(i, j));
        if (n < 2 || gap > min_gap) return s;
    }
    throw UsageError("random_finite_space: could not separate points; lower min_gap");
}

SequentialFamily random_convergent_family(int length, std::mt19937_64& rng) {
    if (length < 4) throw UsageError("random_convergent_family: length must be >= 4");
    auto space = Space::euclid_cutoff(2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> kdist(1, 4);
    std::uniform_real_distribution<double> decay_dist(0.1, 0.5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> settle(1, length / 2);
    std::uniform_int_distribution<int> flavor(0, 3);

    const int k = kdist(rng);
    std::vector<std::vector<double>> limit_pts(k);
    for (auto& p : limit_pts) p = {unit(rng), unit(rng)};
    const double decay = decay_dist(rng);
    std::vector<double> dirs(k);
    for (auto& a : dirs) a = angle(rng);

    // 0,1: plain shrink. 2: a stray extra point for the first terms.
    // 3: the last limit point only shows up in later terms.
    const int kind = flavor(rng);
    const int settle_at = settle(rng);
    std::vector<double> stray = {unit(rng) + 2.0, unit(rng)};  // well outside the box

    std::vector<CompactSet> terms;
    terms.reserve(length);
    for (int n = 1; n <= length; ++n) {
        std::vector<std::vector<double>> pts;
        const int visible = (kind == 3 && n < settle_at) ? k - 1 : k;
        for (int i = 0; i < std::max(visible, 1); ++i) {
            double r = decay / n;
            pts.push_back({limit_pts[i][0] + r * std::cos(dirs[i]),
                           limit_pts[i][1] + r * std::sin(dirs[i])});
        }
        if (kind == 2 && n < settle_at) pts.push_back(stray);
        terms.push_back(CompactSet::from_coords(space, pts));
    }
    return SequentialFamily(std::move(terms), CompactSet::from_coords(space, limit_pts));
}

SequentialFamily alternating_family(int length, std::mt19937_64& rng) {
    if (length < 2) throw UsageError("alternating_family: length must be >= 2");
    auto space = Space::euclid_cutoff(2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> a = {unit(rng), unit(rng)};
    std::vector<double> b = {a[0] + 0.6, a[1]};
    std::vector<CompactSet> terms;
    terms.reserve(length);
    for (int n = 1; n <= length; ++n)
        terms.push_back(CompactSet::from_coords(space, {n % 2 == 1 ? a : b}));
    return SequentialFamily(std::move(terms), CompactSet::from_coords(space, {a}));
}

namespace {

SpacePtr line_space(SpacePtr space) {
    if (!space) return Space::euclid_cutoff(1);
    if (space->kind() == Space::Kind::Matrix || space->dim() != 1)
        throw UsageError("collision families live in a 1-d coordinate space");
    return space;
}

}  // namespace

SequentialFamily point_collapse_family(int length, SpacePtr space) {
    if (length < 1) throw UsageError("family length must be >= 1");
    auto sp = line_space(std::move(space));
    std::vector<CompactSet> terms;
    terms.reserve(length);
    for (int n = 1; n <= length; ++n)
        terms.push_back(CompactSet::from_coords(sp, {{0.0}, {1.0 / n}}));
    return SequentialFamily(std::move(terms), CompactSet::from_coords(sp, {{0.0}}));
}

SequentialFamily collision_family_two(int length, SpacePtr space) {
    if (length < 1) throw UsageError("family length must be >= 1");
    auto sp = line_space(std::move(space));
    std::vector<CompactSet> terms;
    terms.reserve(length);
    for (int n = 1; n <= length; ++n)
        terms.push_back(CompactSet::from_coords(sp, {{-1.0 / n}, {1.0 / n}}));
    return SequentialFamily(std::move(terms), CompactSet::from_coords(sp, {{0.0}}));
}

SequentialFamily collision_family_three(int length, SpacePtr space) {
    if (length < 1) throw UsageError("family length must be >= 1");
    auto sp = line_space(std::move(space));
    std::vector<CompactSet> terms;
    terms.reserve(length);
    for (int n = 1; n <= length; ++n)
        terms.push_back(CompactSet::from_coords(sp, {{-1.0 / n}, {0.0}, {1.0 / n}}));
    return SequentialFamily(std::move(terms), CompactSet::from_coords(sp, {{0.0}}));
}

}  // namespace hspace
