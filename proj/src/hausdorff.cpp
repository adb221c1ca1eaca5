#include "hspace/hausdorff.hpp"

#include <algorithm>
#include <cmath>

namespace hspace {

namespace {

// Pruning slack for the tree traversal. Subtree bounds come from the
// triangle inequality; computed distances obey it only up to rounding
// (coordinate metrics: a few ulps; matrix spaces: the axiom tolerance
// they were verified at, 1e-12 throughout this library). 1e-9 dominates
// both, so a pruned subtree really contains no distance <= the running
// best and exactness of the returned minimum survives floating point.
constexpr double kPruneSlack = 1e-9;

double directed_impl(const CompactSet& a, const CompactSet& b) {
    // sup over a of inf over b, inner loop in member order of b, outer in
    // member order of a. min/max of a fixed multiset of doubles does not
    // depend on visit order, which is what makes the fast route's
    // early-break tricks provably value-identical.
    const Space& space = *a.space();
    double cmax = 0.0;
    for (const auto& pa : a.members()) {
        double cmin = 1.0;
        for (const auto& pb : b.members()) {
            double d = space.distance(pa, pb);
            if (d < cmin) cmin = d;
        }
        if (cmin > cmax) cmax = cmin;
    }
    return cmax;
}

}  // namespace

double directed_hausdorff(const CompactSet& a, const CompactSet& b) {
    require_same_space(a, b, "directed_hausdorff");
    if (a.is_empty()) return 0.0;  // empty sup
    if (b.is_empty()) return 1.0;  // inf over nothing, capped by the bound
    return directed_impl(a, b);
}

double hausdorff_distance(const CompactSet& a, const CompactSet& b) {
    double ab = directed_hausdorff(a, b);
    double ba = directed_hausdorff(b, a);
    return ab > ba ? ab : ba;
}

SpatialIndex::SpatialIndex(const CompactSet& set)
    : space_(set.space()), points_(set.members()) {
    order_.resize(points_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
    if (!order_.empty()) {
        nodes_.reserve(order_.size());
        root_ = build(0, static_cast<int>(order_.size()));
    }
}

int SpatialIndex::build(int begin, int end) {
    Node node;
    node.begin = begin;
    node.end = end;
    node.point = order_[begin];
    node.radius = 0.0;
    const int rest = begin + 1;
    if (rest < end) {
        const Point& vantage = points_[node.point];
        // Median split by (distance to vantage, original position); the
        // position tie-break keeps construction deterministic.
        std::vector<std::pair<double, int>> byDist;
        byDist.reserve(end - rest);
        for (int i = rest; i < end; ++i)
            byDist.emplace_back(space_->distance(vantage, points_[order_[i]]), order_[i]);
        const int mid = (end - rest) / 2;
        std::nth_element(byDist.begin(), byDist.begin() + mid, byDist.end());
        std::sort(byDist.begin(), byDist.begin() + mid);
        std::sort(byDist.begin() + mid, byDist.end());
        for (int i = rest; i < end; ++i) order_[i] = byDist[i - rest].second;
        node.radius = byDist[mid].first;

        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(node);
        int inside = mid > 0 ? build(rest, rest + mid) : -1;
        int outside = build(rest + mid, end);
        nodes_[id].inside = inside;
        nodes_[id].outside = outside;
        return id;
    }
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    return id;
}

void SpatialIndex::query(int node, const Point& q, double& best, double cutoff) const {
    if (node < 0 || best <= cutoff) return;
    const Node& n = nodes_[node];
    double d = space_->distance(q, points_[n.point]);
    if (d < best) best = d;
    if (best <= cutoff) return;
    if (n.inside < 0 && n.outside < 0) return;

    // Inside subtree holds points within n.radius of the vantage,
    // outside subtree the rest; prune with the triangle bound plus slack.
    if (d < n.radius) {
        query(n.inside, q, best, cutoff);
        if (best > cutoff && !(n.radius - d > best + kPruneSlack))
            query(n.outside, q, best, cutoff);
    } else {
        query(n.outside, q, best, cutoff);
        if (best > cutoff && !(d - n.radius > best + kPruneSlack))
            query(n.inside, q, best, cutoff);
    }
}

double SpatialIndex::nearest_distance(const Point& q) const {
    if (order_.empty()) throw UsageError("nearest query against an empty index");
    space_->require_member(q, "nearest query");
    double best = 2.0;  // above any bounded distance
    query(root_, q, best, -1.0);
    return best;
}

double SpatialIndex::nearest_at_most(const Point& q, double cutoff) const {
    if (order_.empty()) throw UsageError("nearest query against an empty index");
    space_->require_member(q, "nearest query");
    double best = 2.0;
    query(root_, q, best, cutoff);
    return best;
}

bool SpatialIndex::indexes(const CompactSet& set) const {
    if (space_.get() != set.space().get()) return false;
    if (static_cast<int>(points_.size()) != set.size()) return false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!points_[i].same_as(set.members()[i])) return false;
    }
    return true;
}

double hausdorff_distance_fast(const CompactSet& a, const CompactSet& b,
                               const SpatialIndex& ia, const SpatialIndex& ib) {
    require_same_space(a, b, "hausdorff_distance_fast");
    if (!ia.indexes(a) || !ib.indexes(b))
        throw UsageError("hausdorff_distance_fast: index is stale for its set");
    if (a.is_empty() && b.is_empty()) return 0.0;
    if (a.is_empty() || b.is_empty()) return 1.0;

    // Running max over nearest-distances. A query may stop early once it
    // is pinned below the running max: whatever exact minimum it would
    // have produced cannot raise the max. Minima that do exceed the max
    // come back exact, so the final value is bitwise the brute force one.
    double cmax = 0.0;
    for (const auto& pa : a.members()) {
        double d = ib.nearest_at_most(pa, cmax);
        if (d > cmax) cmax = d;
    }
    for (const auto& pb : b.members()) {
        double d = ia.nearest_at_most(pb, cmax);
        if (d > cmax) cmax = d;
    }
    return cmax;
}

double product_metric(const CompactSet& za, const Point& xa, const CompactSet& zb,
                      const Point& xb) {
    require_same_space(za, zb, "product_metric");
    za.space()->require_member(xa, "product_metric");
    zb.space()->require_member(xb, "product_metric");
    double dh = hausdorff_distance(za, zb);
    double dx = za.space()->distance(xa, xb);
    return dh > dx ? dh : dx;
}

CompactSet epsilon_net(const CompactSet& s, double eps) {
    if (!(eps > 0.0)) throw UsageError("epsilon_net: eps must be > 0");
    std::vector<Point> net;
    const Space& space = *s.space();
    for (const auto& p : s.members()) {
        bool separated = true;
        for (const auto& q : net) {
            if (space.distance(p, q) <= eps) {
                separated = false;
                break;
            }
        }
        if (separated) net.push_back(p);
    }
    return CompactSet(s.space(), std::move(net), eps);
}

}  // namespace hspace
