#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hspace/errors.hpp"

namespace hspace {

/// A point of an ambient space. Matrix-backed spaces address points by
/// integer id; coordinate-backed spaces carry a real vector. A point may
/// hold both when a matrix space was built from an embedding.
class Point {
  public:
    Point() = default;

    static Point with_id(int id) {
        Point p;
        p.id_ = require_id(id);
        return p;
    }

    static Point with_coords(std::vector<double> coords) {
        Point p;
        p.coords_ = std::move(coords);
        p.require_finite();
        return p;
    }

    static Point with_id_coords(int id, std::vector<double> coords) {
        Point p;
        p.id_ = require_id(id);
        p.coords_ = std::move(coords);
        p.require_finite();
        return p;
    }

    bool has_id() const { return id_ >= 0; }

    int id() const {
        if (id_ < 0) throw UsageError("point has no id");
        return id_;
    }

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<double>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    /// Identity within a single space: by id when both sides have one,
    /// otherwise by exact coordinate equality.
    bool same_as(const Point& other) const {
        if (has_id() && other.has_id()) return id_ == other.id_;
        if (has_id() != other.has_id()) return false;
        return coords_ == other.coords_;
    }

    std::string describe() const;

  private:
    static int require_id(int id) {
        if (id < 0) throw UsageError("point id must be >= 0");
        return id;
    }

    void require_finite() const {
        for (double c : coords_) {
            if (!std::isfinite(c)) throw UsageError("point coordinates must be finite");
        }
    }

    int id_ = -1;
    std::vector<double> coords_;
};

}  // namespace hspace
