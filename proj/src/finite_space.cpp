#include "hspace/finite_space.hpp"

#include <cmath>
#include <cstdio>

namespace hspace {

FiniteSpace::FiniteSpace(int n, std::vector<double> lower_triangle,
                         std::vector<std::string> labels)
    : n_(n), tri_(std::move(lower_triangle)), labels_(std::move(labels)) {
    if (n_ < 0) throw UsageError("finite space size must be >= 0");
    std::size_t want = n_ > 0 ? static_cast<std::size_t>(n_) * (n_ - 1) / 2 : 0;
    if (tri_.size() != want)
        throw UsageError("finite space: lower triangle has wrong length");
    for (double d : tri_) {
        if (!std::isfinite(d))
            throw UsageError("finite space: distances must be finite");
    }
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
        throw UsageError("finite space: label count does not match n");
}

FiniteSpace FiniteSpace::from_points(const std::vector<std::vector<double>>& pts,
                                     const BoundedMetric& metric,
                                     std::vector<std::string> labels) {
    const int n = static_cast<int>(pts.size());
    std::vector<Point> points;
    points.reserve(pts.size());
    for (const auto& c : pts) points.push_back(Point::with_coords(c));

    std::vector<double> tri;
    tri.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) tri.push_back(metric(points[i], points[j]));

    FiniteSpace s(n, std::move(tri), std::move(labels));
    s.coords_ = pts;
    return s;
}

FiniteSpace FiniteSpace::uniform(int n, double d) {
    if (d < 0.0 || d > 1.0) throw UsageError("uniform space needs d in [0,1]");
    std::vector<double> tri(static_cast<std::size_t>(n) * (n - 1) / 2, d);
    return FiniteSpace(n, std::move(tri));
}

const std::string& FiniteSpace::label(int i) const {
    check_index(i);
    if (labels_.empty()) throw UsageError("finite space has no labels");
    return labels_[i];
}

std::string AxiomViolation::describe() const {
    char buf[128];
    if (axiom == "triangle") {
        std::snprintf(buf, sizeof(buf), "triangle: d(%d,%d) > d(%d,%d) + d(%d,%d) by %.3g",
                      i, k, i, j, j, k, residual);
    } else {
        std::snprintf(buf, sizeof(buf), "%s: d(%d,%d) outside [0,1] by %.3g",
                      axiom.c_str(), i, j, residual);
    }
    return buf;
}

std::vector<AxiomViolation> verify_metric_axioms(const FiniteSpace& s, double tol) {
    if (tol < 0.0) throw UsageError("verify_metric_axioms: tol must be >= 0");
    std::vector<AxiomViolation> out;
    const int n = s.size();

    // Work off a dense square copy; the triple scan below touches each
    // entry many times.
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i) * n + j] = s.dist(i, j);
    auto at = [&](int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; };

    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            double v = at(i, j);
            if (v < -tol || v > 1.0 + tol)
                out.push_back({"range", i, j, -1, v < 0.0 ? -v : v - 1.0});
        }

    // d(i,k) <= d(i,j) + d(j,k); symmetry makes unordered {i,k} enough.
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            double dik = at(i, k);
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                double defect = dik - (at(i, j) + at(j, k));
                if (defect > tol) out.push_back({"triangle", i, j, k, defect});
            }
        }
    return out;
}

}  // namespace hspace
