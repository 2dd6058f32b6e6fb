#pragma once

#include <Eigen/Dense>

#include <vector>

namespace ncd {

struct JacobiOptions {
    /// Sweeps stop once the off-diagonal Frobenius norm is at most
    /// off_tolerance * max(1, ||M||_F).
    double off_tolerance = 1e-12;
    int max_sweeps = 100;
    /// Allowed max |M - M^*| entry for the input.
    double hermitian_tolerance = 1e-10;
};

/// All eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi.
/// Throws PreconditionError for non-Hermitian input and NumericalError when
/// the sweep limit is reached.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m, const JacobiOptions& opts = {});

/// Smallest eigenvalue of a Hermitian matrix.
double min_eig_hermitian(const Eigen::MatrixXcd& m, const JacobiOptions& opts = {});

} // namespace ncd
