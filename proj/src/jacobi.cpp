#include "ncdomain/jacobi.hpp"

#include "ncdomain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace ncd {

namespace {

using Complex = std::complex<double>;

double off_diagonal_norm(const Eigen::MatrixXcd& a)
{
    double s = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c)
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            if (r != c)
                s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary G = diag(1, conj(e)) * [[c, s], [-s, c]]
// acting on coordinates (p, q), where a(p, q) = |a(p, q)| e.
void rotate(Eigen::MatrixXcd& a, Eigen::Index p, Eigen::Index q)
{
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    const Complex e = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex se = s * e;
    const Complex ce = c * e;
    // Columns: A <- A G.
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        const Complex arp = a(r, p);
        const Complex arq = a(r, q);
        a(r, p) = c * arp - std::conj(se) * arq;
        a(r, q) = s * arp + std::conj(ce) * arq;
    }
    // Rows: A <- G^* A.
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - se * aqk;
        a(q, k) = s * apk + ce * aqk;
    }
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m, const JacobiOptions& opts)
{
    if (m.rows() != m.cols())
        throw PreconditionError("eigenvalues requested for a non-square matrix");
    const Eigen::Index d = m.rows();
    if (d == 0)
        return {};
    if (const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff(); skew > opts.hermitian_tolerance)
        throw PreconditionError("matrix is not Hermitian (max |M - M*| = " + std::to_string(skew) + ")");

    Eigen::MatrixXcd a = (m + m.adjoint()) * 0.5;
    const double threshold = opts.off_tolerance * std::max(1.0, a.norm());

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweep++ >= opts.max_sweeps)
            throw NumericalError("Jacobi iteration did not converge in " + std::to_string(opts.max_sweeps) +
                                 " sweeps");
        for (Eigen::Index p = 0; p < d - 1; ++p)
            for (Eigen::Index q = p + 1; q < d; ++q)
                if (std::abs(a(p, q)) > 0.0)
                    rotate(a, p, q);
    }

    std::vector<double> eig(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i)
        eig[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double min_eig_hermitian(const Eigen::MatrixXcd& m, const JacobiOptions& opts)
{
    auto eig = hermitian_eigenvalues(m, opts);
    if (eig.empty())
        throw PreconditionError("eigenvalues requested for an empty matrix");
    return eig.front();
}

} // namespace ncd
