#pragma once

#include "ncdomain/fock.hpp"
#include "ncdomain/symbol.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace ncd {

/// q_f(lambda) = sum_w a_w |lambda^w|^2. The scalar domain of f is {q_f <= 1}.
double q_value(const Symbol& f, const ComplexVector& point);

/// q_f(lambda) <= 1 + 1e-12
bool scalar_member(const Symbol& f, const ComplexVector& point);

/// The r > 0 with q_f(r u) = 1 along the direction u (normalized internally).
/// Bracket doubling from [0, 1], then bisection until |q - 1| <= tol.
double boundary_radius(const Symbol& f, const ComplexVector& direction, double tol = 1e-12);

/// A point of C^n together with its squared Euclidean norm.
class BallPoint {
public:
    explicit BallPoint(ComplexVector z) : z_(std::move(z)), norm2_(z_.squaredNorm()) {}

    const ComplexVector& z() const noexcept { return z_; }
    double norm2() const noexcept { return norm2_; }
    double norm() const;
    Eigen::Index size() const noexcept { return z_.size(); }
    bool in_ball() const noexcept { return norm2_ <= 1.0; }

private:
    ComplexVector z_;
    double norm2_;
};

/// The involutive automorphism of the unit ball exchanging 0 and omega:
///   phi(z) = (omega - P z - s Q z) / (1 - <z, omega>),
/// P the projection onto C omega, Q = I - P, s = sqrt(1 - |omega|^2).
BallPoint moebius(const BallPoint& omega, const BallPoint& z);

/// A circle in C^n = R^{2n}: center, radius, and an orthonormal real basis of its plane.
struct CircleFit {
    ComplexVector center;
    double radius = 0.0;
    ComplexVector axis_u;
    ComplexVector axis_v;
    /// Max Euclidean distance of the samples from the fitted circle.
    double residual = 0.0;

    /// Euclidean distance from p to the nearest point of the circle.
    double distance(const ComplexVector& p) const;
};

/// Least-squares circle through points of C^n: principal 2-plane of the
/// centered samples, then an algebraic circle fit inside that plane.
/// Throws PreconditionError for fewer than 3 points or collinear samples.
CircleFit fit_circle(std::span<const ComplexVector> points);

/// Samples {e^{i theta} omega} at m equally spaced angles, maps each through
/// z -> U phi_omega(z), and fits a circle to the images.
CircleFit circle_image(const BallPoint& omega, const ComplexMatrix& unitary, int samples);

} // namespace ncd
