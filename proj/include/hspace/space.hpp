#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hspace/finite_space.hpp"
#include "hspace/metric.hpp"
#include "hspace/point.hpp"

namespace hspace {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Ambient bounded metric space. Two sets are comparable only when they
/// share the same Space instance, so spaces are handled by shared_ptr and
/// compared by address. distance() stays on an inline switch because it
/// sits in the innermost loops of every Hausdorff computation.
class Space {
  public:
    enum class Kind { Matrix, EuclidCutoff, DiskPullback, Custom };

    static SpacePtr matrix(FiniteSpace fs, std::string name = "matrix");
    static SpacePtr euclid_cutoff(int dim);
    static SpacePtr disk_pullback(int dim = 2);
    static SpacePtr custom(int dim, BoundedMetric metric, std::string name = "custom");

    Kind kind() const { return kind_; }
    bool is_matrix() const { return kind_ == Kind::Matrix; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    /// Point count of a matrix-backed space; UsageError otherwise.
    int size() const;
    const FiniteSpace& finite() const;

    /// The i-th point of a matrix-backed space, with embedding coords
    /// attached when the space has them.
    Point point(int id) const;

    double distance(const Point& a, const Point& b) const {
        switch (kind_) {
            case Kind::Matrix:
                return finite_.dist(a.id(), b.id());
            case Kind::EuclidCutoff: {
                double d = euclid(a, b);
                return d < 1.0 ? d : 1.0;
            }
            case Kind::DiskPullback:
            case Kind::Custom:
                return custom_(a, b);
        }
        return 0.0;  // unreachable
    }

    /// True when p is addressable in this space (id in range for matrix
    /// spaces, matching finite coordinates otherwise).
    bool admits(const Point& p) const;
    void require_member(const Point& p, const char* what) const;

  private:
    Space(Kind kind, int dim, std::string name)
        : kind_(kind), dim_(dim), name_(std::move(name)),
          finite_(0, {}), custom_(nullptr) {}

    Kind kind_;
    int dim_;
    std::string name_;
    FiniteSpace finite_;
    MetricFn custom_;
};

/// Finite (hence compact) subset of an ambient space. Members are deduped
/// on construction, preserving first-seen order. `resolution` is advisory
/// metadata for sets that stand in for an infinite compact set: the mesh
/// of the sample, carried through so consumers can report it.
class CompactSet {
  public:
    CompactSet(SpacePtr space, std::vector<Point> members, double resolution = 0.0);

    static CompactSet empty(SpacePtr space) { return CompactSet(std::move(space), {}); }
    static CompactSet from_ids(SpacePtr space, const std::vector<int>& ids,
                               double resolution = 0.0);
    static CompactSet from_coords(SpacePtr space,
                                  const std::vector<std::vector<double>>& pts,
                                  double resolution = 0.0);

    const SpacePtr& space() const { return space_; }
    const std::vector<Point>& members() const { return members_; }
    const Point& member(int i) const { return members_[i]; }
    int size() const { return static_cast<int>(members_.size()); }
    bool is_empty() const { return members_.empty(); }
    double resolution() const { return resolution_; }

    bool contains(const Point& p) const;

    /// Distance from q to the nearest member; UsageError on the empty set.
    double min_distance(const Point& q) const;

  private:
    SpacePtr space_;
    std::vector<Point> members_;
    double resolution_ = 0.0;
};

inline bool same_space(const CompactSet& a, const CompactSet& b) {
    return a.space().get() == b.space().get();
}

void require_same_space(const CompactSet& a, const CompactSet& b, const char* op);

}  // namespace hspace
