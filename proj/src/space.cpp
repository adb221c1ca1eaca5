#include "hspace/space.hpp"

#include <cmath>
#include <set>
#include <unordered_set>

namespace hspace {

SpacePtr Space::matrix(FiniteSpace fs, std::string name) {
    auto s = std::shared_ptr<Space>(new Space(Kind::Matrix, 0, std::move(name)));
    s->finite_ = std::move(fs);
    return s;
}

SpacePtr Space::euclid_cutoff(int dim) {
    if (dim <= 0) throw UsageError("euclid space needs dim >= 1");
    return std::shared_ptr<Space>(new Space(Kind::EuclidCutoff, dim, "euclid-cutoff"));
}

SpacePtr Space::disk_pullback(int dim) {
    if (dim <= 0) throw UsageError("disk space needs dim >= 1");
    auto s = std::shared_ptr<Space>(new Space(Kind::DiskPullback, dim, "disk-pullback"));
    BoundedMetric m = BoundedMetric::disk_pullback();
    s->custom_ = [m](const Point& a, const Point& b) { return m(a, b); };
    return s;
}

SpacePtr Space::custom(int dim, BoundedMetric metric, std::string name) {
    if (dim < 0) throw UsageError("custom space needs dim >= 0");
    auto s = std::shared_ptr<Space>(new Space(Kind::Custom, dim, std::move(name)));
    s->custom_ = [m = std::move(metric)](const Point& a, const Point& b) { return m(a, b); };
    return s;
}

int Space::size() const {
    if (!is_matrix()) throw UsageError("size() needs a matrix-backed space");
    return finite_.size();
}

const FiniteSpace& Space::finite() const {
    if (!is_matrix()) throw UsageError("finite() needs a matrix-backed space");
    return finite_;
}

Point Space::point(int id) const {
    if (!is_matrix()) throw UsageError("point(id) needs a matrix-backed space");
    if (id < 0 || id >= finite_.size()) throw UsageError("point id out of range");
    if (finite_.has_coords()) return Point::with_id_coords(id, finite_.coords()[id]);
    return Point::with_id(id);
}

bool Space::admits(const Point& p) const {
    if (is_matrix()) return p.has_id() && p.id() < finite_.size();
    return p.has_coords() && p.dim() == dim_;
}

void Space::require_member(const Point& p, const char* what) const {
    if (!admits(p)) {
        throw UsageError(std::string(what) + ": point " + p.describe() +
                         " is not addressable in space '" + name_ + "'");
    }
}

CompactSet::CompactSet(SpacePtr space, std::vector<Point> members, double resolution)
    : space_(std::move(space)), resolution_(resolution) {
    if (!space_) throw UsageError("compact set needs an ambient space");
    if (resolution_ < 0.0) throw UsageError("resolution must be >= 0");
    members_.reserve(members.size());
    // Dedup mirrors Point::same_as: id-bearing points compare by id,
    // coordinate-only points by exact coords (std::less on doubles, like
    // operator==, does not tell -0.0 from 0.0). The two groups never
    // collide.
    std::unordered_set<int> seen_ids;
    std::set<std::vector<double>> seen_coords;
    for (auto& p : members) {
        space_->require_member(p, "compact set member");
        bool fresh = p.has_id() ? seen_ids.insert(p.id()).second
                                : seen_coords.insert(p.coords()).second;
        if (fresh) members_.push_back(std::move(p));
    }
}

CompactSet CompactSet::from_ids(SpacePtr space, const std::vector<int>& ids,
                                double resolution) {
    if (!space) throw UsageError("compact set needs an ambient space");
    std::vector<Point> pts;
    pts.reserve(ids.size());
    for (int id : ids) pts.push_back(space->point(id));
    return CompactSet(std::move(space), std::move(pts), resolution);
}

CompactSet CompactSet::from_coords(SpacePtr space,
                                   const std::vector<std::vector<double>>& pts,
                                   double resolution) {
    std::vector<Point> points;
    points.reserve(pts.size());
    for (const auto& c : pts) points.push_back(Point::with_coords(c));
    return CompactSet(std::move(space), std::move(points), resolution);
}

bool CompactSet::contains(const Point& p) const {
    for (const auto& q : members_) {
        if (q.same_as(p)) return true;
    }
    return false;
}

double CompactSet::min_distance(const Point& q) const {
    if (members_.empty()) throw UsageError("min_distance over the empty set");
    double best = space_->distance(members_[0], q);
    for (std::size_t i = 1; i < members_.size(); ++i) {
        double d = space_->distance(members_[i], q);
        if (d < best) best = d;
    }
    return best;
}

void require_same_space(const CompactSet& a, const CompactSet& b, const char* op) {
    if (!same_space(a, b)) {
        throw UsageError(std::string(op) + ": sets live in different ambient spaces ('" +
                         a.space()->name() + "' vs '" + b.space()->name() + "')");
    }
}

}  // namespace hspace
