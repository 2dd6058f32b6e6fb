#include "ncdomain/geometry.hpp"

#include "ncdomain/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace ncd {

double q_value(const Symbol& f, const ComplexVector& point)
{
    if (point.size() != f.arity())
        throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, symbol arity is " +
                             std::to_string(f.arity()));
    double q = 0.0;
    for (const auto& [w, a] : f.coefficients()) {
        double m = 1.0;
        for (int c : w)
            m *= std::norm(point[c - 1]);
        q += a.get_d() * m;
    }
    return q;
}

bool scalar_member(const Symbol& f, const ComplexVector& point) { return q_value(f, point) <= 1.0 + 1e-12; }

double boundary_radius(const Symbol& f, const ComplexVector& direction, double tol)
{
    if (direction.size() != f.arity())
        throw DimensionError("direction size does not match symbol arity");
    if (!(tol > 0.0))
        throw PreconditionError("boundary tolerance must be positive");
    const double len = direction.norm();
    if (len == 0.0)
        throw PreconditionError("boundary direction must be nonzero");
    const ComplexVector u = direction / len;
    auto q = [&](double r) { return q_value(f, r * u); };

    double lo = 0.0;
    double hi = 1.0;
    while (q(hi) <= 1.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi))
            throw NumericalError("boundary bracket diverged");
    }
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double v = q(mid);
        if (std::abs(v - 1.0) <= tol)
            return mid;
        (v < 1.0 ? lo : hi) = mid;
    }
    return mid;
}

double BallPoint::norm() const { return std::sqrt(norm2_); }

BallPoint moebius(const BallPoint& omega, const BallPoint& z)
{
    if (omega.size() != z.size())
        throw DimensionError("Moebius map arguments differ in dimension");
    if (omega.norm2() >= 1.0)
        throw PreconditionError("Moebius center must lie strictly inside the unit ball");

    const ComplexVector& w = omega.z();
    const ComplexVector& x = z.z();
    // <x, w> = sum x_j conj(w_j)
    const Complex inner = w.dot(x);
    const Complex denom = 1.0 - inner;
    if (std::abs(denom) < 1e-14)
        throw PreconditionError("Moebius map evaluated at its pole");

    ComplexVector proj = ComplexVector::Zero(x.size());
    if (omega.norm2() > 0.0)
        proj = (inner / omega.norm2()) * w;
    const double s = std::sqrt(1.0 - omega.norm2());
    return BallPoint((w - proj - s * (x - proj)) / denom);
}

double CircleFit::distance(const ComplexVector& p) const
{
    const ComplexVector d = p - center;
    const double a = d.dot(axis_u).real();
    const double b = d.dot(axis_v).real();
    const ComplexVector off = d - a * axis_u - b * axis_v;
    const double in_plane = std::hypot(a, b) - radius;
    return std::sqrt(off.squaredNorm() + in_plane * in_plane);
}

namespace {

Eigen::VectorXd to_real(const ComplexVector& z)
{
    Eigen::VectorXd r(2 * z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        r[2 * i] = z[i].real();
        r[2 * i + 1] = z[i].imag();
    }
    return r;
}

ComplexVector to_complex(const Eigen::VectorXd& r)
{
    ComplexVector z(r.size() / 2);
    for (Eigen::Index i = 0; i < z.size(); ++i)
        z[i] = Complex(r[2 * i], r[2 * i + 1]);
    return z;
}

} // namespace

CircleFit fit_circle(std::span<const ComplexVector> points)
{
    if (points.size() < 3)
        throw PreconditionError("circle fit needs at least 3 points");
    const Eigen::Index dim = 2 * points.front().size();
    const auto m = static_cast<Eigen::Index>(points.size());

    Eigen::MatrixXd samples(dim, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        if (points[static_cast<std::size_t>(k)].size() * 2 != dim)
            throw DimensionError("circle fit points differ in dimension");
        samples.col(k) = to_real(points[static_cast<std::size_t>(k)]);
    }
    const Eigen::VectorXd mean = samples.rowwise().mean();
    const Eigen::MatrixXd centered = samples.colwise() - mean;

    // Principal 2-plane: top two eigenvectors of the scatter matrix.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> scatter(centered * centered.transpose());
    const Eigen::VectorXd& ev = scatter.eigenvalues();
    const double top = ev[dim - 1];
    if (top <= 0.0 || ev[dim - 2] <= 1e-12 * top)
        throw PreconditionError("degenerate circle fit: samples are collinear");
    const Eigen::VectorXd u = scatter.eigenvectors().col(dim - 1);
    const Eigen::VectorXd v = scatter.eigenvectors().col(dim - 2);

    // x^2 + y^2 + D x + E y + F = 0 in plane coordinates, least squares.
    Eigen::MatrixXd design(m, 3);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double x = centered.col(k).dot(u);
        const double y = centered.col(k).dot(v);
        design.row(k) << x, y, 1.0;
        rhs[k] = -(x * x + y * y);
    }
    const Eigen::Vector3d sol = design.colPivHouseholderQr().solve(rhs);
    const double cx = -0.5 * sol[0];
    const double cy = -0.5 * sol[1];
    const double r2 = cx * cx + cy * cy - sol[2];
    if (!(r2 > 0.0))
        throw PreconditionError("degenerate circle fit: nonpositive radius");

    CircleFit fit;
    fit.center = to_complex(mean + cx * u + cy * v);
    fit.radius = std::sqrt(r2);
    fit.axis_u = to_complex(u);
    fit.axis_v = to_complex(v);
    fit.residual = 0.0;
    for (const auto& p : points)
        fit.residual = std::max(fit.residual, fit.distance(p));
    return fit;
}

CircleFit circle_image(const BallPoint& omega, const ComplexMatrix& unitary, int samples)
{
    const Eigen::Index n = omega.size();
    if (!(omega.norm2() > 0.0 && omega.norm2() < 1.0))
        throw PreconditionError("circle image needs 0 < |omega| < 1");
    if (unitary.rows() != n || unitary.cols() != n)
        throw DimensionError("unitary size does not match the ball dimension");
    if ((unitary.adjoint() * unitary - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
        throw PreconditionError("matrix is not unitary within 1e-12");
    if (samples < 16)
        throw PreconditionError("circle image needs at least 16 samples");

    std::vector<ComplexVector> images;
    images.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / samples;
        const BallPoint z(std::polar(1.0, theta) * omega.z());
        images.push_back(unitary * moebius(omega, z).z());
    }
    return fit_circle(images);
}

} // namespace ncd
