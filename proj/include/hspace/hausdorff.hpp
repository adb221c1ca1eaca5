#pragma once

#include <cstdint>
#include <vector>

#include "hspace/space.hpp"

namespace hspace {

/// sup over a of the distance from a to B, with the empty-set conventions
/// d(empty, anything) = 0 and d(nonempty, empty) = 1. Both sets must live
/// in the same Space instance.
double directed_hausdorff(const CompactSet& a, const CompactSet& b);

/// max of the two directed distances. Symmetric, [0,1], and a genuine
/// metric on the set of (deduplicated) finite subsets.
double hausdorff_distance(const CompactSet& a, const CompactSet& b);

/// Nearest-member queries against a fixed set, organised as a vantage
/// point tree over the ambient metric. Construction is deterministic
/// (median splits on the input order), queries are exact: for any q,
/// nearest_distance(q) is bitwise equal to the brute-force minimum of
/// distance(q, m) over members m in input order.
class SpatialIndex {
  public:
    explicit SpatialIndex(const CompactSet& set);

    double nearest_distance(const Point& q) const;

    /// Like nearest_distance, but may stop early once the running best is
    /// <= cutoff. The exact minimum is returned whenever it exceeds
    /// cutoff; otherwise the returned value is some member distance that
    /// is <= cutoff (enough to decide a sup-min comparison).
    double nearest_at_most(const Point& q, double cutoff) const;

    int size() const { return static_cast<int>(order_.size()); }
    const SpacePtr& space() const { return space_; }

    /// True when this index was built over exactly the given set (same
    /// space, same members in order). Guards against stale indexes.
    bool indexes(const CompactSet& set) const;

  private:
    struct Node {
        int point;        // index into order_
        double radius;    // median distance to the inside subtree
        int inside = -1;  // children in nodes_
        int outside = -1;
        int begin, end;   // slice of order_ covered by this subtree
    };

    int build(int begin, int end);
    void query(int node, const Point& q, double& best, double cutoff) const;

    SpacePtr space_;
    std::vector<Point> points_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Accelerated Hausdorff distance. ia/ib must index a/b respectively
/// (UsageError otherwise). Bitwise equal to hausdorff_distance(a, b): the
/// tree prunes with a slack covering floating-point triangle defects, and
/// early termination only ever skips work that cannot change the final
/// max. Keep this separate from hausdorff_distance; the two routes check
/// each other.
double hausdorff_distance_fast(const CompactSet& a, const CompactSet& b,
                               const SpatialIndex& ia, const SpatialIndex& ib);

/// Metric on pairs (Z, x): max of the Hausdorff distance between the sets
/// and the ambient distance between the marked points.
double product_metric(const CompactSet& za, const Point& xa,
                      const CompactSet& zb, const Point& xb);

/// Greedy eps-net of the members of s, scanning in member order: a point
/// joins the net when its distance to every point already in the net
/// exceeds eps. The result covers s within eps and is eps-separated.
CompactSet epsilon_net(const CompactSet& s, double eps);

}  // namespace hspace
