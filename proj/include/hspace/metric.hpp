#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hspace/point.hpp"

namespace hspace {

using MetricFn = std::function<double(const Point&, const Point&)>;

/// Plain Euclidean distance between coordinate points. Unbounded; feed it
/// through cutoff() before handing it to anything that expects [0,1].
double euclid(const Point& a, const Point& b);

/// phi(p) = p / (1 + |p|), the embedding of R^d into the open unit disk.
std::vector<double> disk_embed(const std::vector<double>& coords);

/// Distance oracle with values in [0,1]. Wraps an arbitrary callable;
/// factory helpers below produce the metrics used throughout.
class BoundedMetric {
  public:
    BoundedMetric(MetricFn fn, std::string name)
        : fn_(std::move(fn)), name_(std::move(name)) {}

    /// min(d, 1) of an arbitrary (possibly unbounded) metric.
    static BoundedMetric cutoff(MetricFn unbounded, std::string name = "cutoff");

    /// Euclidean distance capped at 1.
    static BoundedMetric euclid_cutoff();

    /// d'(p, q) = min(1, |phi(p) - phi(q)|) with phi the unit-disk embedding.
    /// Bounded below 1 on all of R^d but still able to tell points near
    /// infinity in different directions apart.
    static BoundedMetric disk_pullback();

    double operator()(const Point& a, const Point& b) const;

    const std::string& name() const { return name_; }

  private:
    MetricFn fn_;
    std::string name_;
};

}  // namespace hspace
