#include "hspace/metric.hpp"

#include <cmath>
#include <cstdio>

namespace hspace {

std::string Point::describe() const {
    char buf[64];
    if (has_id()) {
        std::snprintf(buf, sizeof(buf), "#%d", id_);
        return buf;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.6g", coords_[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += ")";
    return out;
}

double euclid(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw UsageError("euclid: dimension mismatch");
    double sum = 0.0;
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        double d = ca[i] - cb[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

std::vector<double> disk_embed(const std::vector<double>& coords) {
    double norm = 0.0;
    for (double c : coords) norm += c * c;
    norm = std::sqrt(norm);
    double scale = 1.0 / (1.0 + norm);
    std::vector<double> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = coords[i] * scale;
    return out;
}

BoundedMetric BoundedMetric::cutoff(MetricFn unbounded, std::string name) {
    return BoundedMetric(
        [fn = std::move(unbounded)](const Point& a, const Point& b) {
            double d = fn(a, b);
            return d < 1.0 ? d : 1.0;
        },
        std::move(name));
}

BoundedMetric BoundedMetric::euclid_cutoff() {
    return cutoff(&euclid, "euclid-cutoff");
}

BoundedMetric BoundedMetric::disk_pullback() {
    return BoundedMetric(
        [](const Point& a, const Point& b) {
            Point pa = Point::with_coords(disk_embed(a.coords()));
            Point pb = Point::with_coords(disk_embed(b.coords()));
            double d = euclid(pa, pb);
            return d < 1.0 ? d : 1.0;
        },
        "disk-pullback");
}

double BoundedMetric::operator()(const Point& a, const Point& b) const {
    return fn_(a, b);
}

}  // namespace hspace
