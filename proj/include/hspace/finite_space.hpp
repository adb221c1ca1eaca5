#pragma once

#include <string>
#include <vector>

#include "hspace/metric.hpp"
#include "hspace/point.hpp"

namespace hspace {

/// Finite metric space with distances in [0,1]. Stores the strict lower
/// triangle row-major, so d(i,i) = 0 and symmetry hold by construction;
/// verify_metric_axioms checks the remaining axioms numerically.
class FiniteSpace {
  public:
    FiniteSpace(int n, std::vector<double> lower_triangle,
                std::vector<std::string> labels = {});

    /// Evaluate `metric` on every pair of an embedded point list and keep
    /// the embedding for later reference.
    static FiniteSpace from_points(const std::vector<std::vector<double>>& pts,
                                   const BoundedMetric& metric,
                                   std::vector<std::string> labels = {});

    /// All off-diagonal distances equal to d.
    static FiniteSpace uniform(int n, double d);

    int size() const { return n_; }

    double dist(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i == j) return 0.0;
        return i > j ? tri_[tri_index(i, j)] : tri_[tri_index(j, i)];
    }

    const std::vector<double>& lower_triangle() const { return tri_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int i) const;

    /// Embedding coordinates when built via from_points; empty otherwise.
    const std::vector<std::vector<double>>& coords() const { return coords_; }
    bool has_coords() const { return !coords_.empty(); }

  private:
    static std::size_t tri_index(int i, int j) {
        // i > j
        return static_cast<std::size_t>(i) * (i - 1) / 2 + j;
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_) throw UsageError("finite space index out of range");
    }

    int n_ = 0;
    std::vector<double> tri_;
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> coords_;
};

struct AxiomViolation {
    std::string axiom;   // "range" or "triangle"
    int i = -1, j = -1, k = -1;
    double residual = 0.0;

    std::string describe() const;
};

/// Check d(i,j) in [0,1] on every pair and d(i,k) <= d(i,j) + d(j,k) on
/// every triple, up to tol. Zero diagonal and symmetry are structural in
/// FiniteSpace, so an empty report means the space is a genuine bounded
/// pseudometric. tol must be >= 0.
std::vector<AxiomViolation> verify_metric_axioms(const FiniteSpace& s, double tol);

}  // namespace hspace
