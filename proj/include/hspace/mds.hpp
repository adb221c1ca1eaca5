#pragma once

#include <array>
#include <vector>

namespace hspace {

/// Classical multidimensional scaling of a k x k distance matrix
/// (row-major) into the plane, for plot-data output. Coordinates are
/// centered; axes ordered by eigenvalue and sign-fixed so the embedding
/// is deterministic. Degenerate directions collapse to 0.
std::vector<std::array<double, 2>> mds_embed_2d(const std::vector<double>& dmat, int k);

}  // namespace hspace
