#include "hspace/mds.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hspace/errors.hpp"

namespace hspace {

std::vector<std::array<double, 2>> mds_embed_2d(const std::vector<double>& dmat, int k) {
    if (k < 0 || dmat.size() != static_cast<std::size_t>(k) * k)
        throw UsageError("mds_embed_2d: dmat must be k x k row-major");
    if (k == 0) return {};
    if (k == 1) return {{0.0, 0.0}};

    // Double-centered squared distances; its top eigenpairs give the
    // classical MDS embedding.
    Eigen::MatrixXd d2(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const double d = dmat[static_cast<std::size_t>(i) * k + j];
            d2(i, j) = d * d;
        }
    Eigen::MatrixXd j = Eigen::MatrixXd::Identity(k, k) -
                        Eigen::MatrixXd::Constant(k, k, 1.0 / k);
    Eigen::MatrixXd b = -0.5 * j * d2 * j;
    b = 0.5 * (b + b.transpose());  // kill asymmetry from rounding

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success)
        throw UsageError("mds_embed_2d: eigendecomposition failed");

    // Eigen sorts eigenvalues ascending; take the top two.
    std::vector<std::array<double, 2>> out(k, {0.0, 0.0});
    for (int axis = 0; axis < 2 && axis < k; ++axis) {
        const int idx = k - 1 - axis;
        const double lambda = solver.eigenvalues()(idx);
        if (lambda <= 0.0) continue;  // degenerate direction
        Eigen::VectorXd v = solver.eigenvectors().col(idx) * std::sqrt(lambda);
        // Fix the sign: first coordinate of largest magnitude is positive.
        int lead = 0;
        for (int i = 1; i < k; ++i)
            if (std::abs(v(i)) > std::abs(v(lead))) lead = i;
        if (v(lead) < 0.0) v = -v;
        for (int i = 0; i < k; ++i) out[i][axis] = v(i);
    }
    return out;
}

}  // namespace hspace
