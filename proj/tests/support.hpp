#pragma once

// Random generators shared by the unit and acceptance suites.

#include "ncdomain/fock.hpp"
#include "ncdomain/geometry.hpp"
#include "ncdomain/symbol.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace ncd::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform_real(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Rational random_positive_rational(Rng& rng, int max_num = 9, int max_den = 9)
{
    Rational r(uniform_int(rng, 1, max_num), uniform_int(rng, 1, max_den));
    r.canonicalize();
    return r;
}

inline Word random_word(Rng& rng, int n, int length)
{
    std::vector<int> letters(static_cast<std::size_t>(length));
    for (auto& c : letters)
        c = uniform_int(rng, 1, n);
    return Word(std::move(letters));
}

/// Random symbol of arity n and exact degree `degree`: all degree-one terms,
/// plus a few random higher words, coefficients p/q with 1 <= p, q <= 9.
inline Symbol random_symbol(Rng& rng, int n, int degree)
{
    std::map<Word, Rational> coeffs;
    for (int j = 1; j <= n; ++j)
        coeffs[Word::letter(j)] = random_positive_rational(rng);
    for (int len = 2; len <= degree; ++len) {
        const int extra = uniform_int(rng, len == degree ? 1 : 0, 3);
        for (int k = 0; k < extra; ++k)
            coeffs[random_word(rng, n, len)] = random_positive_rational(rng);
    }
    return validate(n, coeffs);
}

inline Symbol random_symbol(Rng& rng, int max_n, int min_degree, int max_degree)
{
    return random_symbol(rng, uniform_int(rng, 1, max_n), uniform_int(rng, min_degree, max_degree));
}

inline Witness random_witness(Rng& rng, int n)
{
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Rational> lambda;
    for (int j = 0; j < n; ++j)
        lambda.push_back(random_positive_rational(rng, 5, 5));
    return Witness(std::move(sigma), std::move(lambda));
}

inline ComplexVector random_complex_vector(Rng& rng, Eigen::Index n)
{
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v[i] = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
    return v;
}

/// Uniform direction scaled to a norm drawn from [0, max_norm].
inline ComplexVector random_ball_vector(Rng& rng, Eigen::Index n, double max_norm)
{
    ComplexVector v = random_complex_vector(rng, n);
    while (v.norm() == 0.0)
        v = random_complex_vector(rng, n);
    return v.normalized() * uniform_real(rng, 0.0, max_norm);
}

inline ComplexMatrix random_matrix(Rng& rng, Eigen::Index d)
{
    ComplexMatrix a(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            a(r, c) = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
    return a;
}

inline ComplexMatrix random_unitary(Rng& rng, Eigen::Index n)
{
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline Complex random_unimodular(Rng& rng) { return std::polar(1.0, uniform_real(rng, 0.0, 2.0 * std::numbers::pi)); }

/// A point strictly inside the scalar domain of f: a random direction at a
/// random fraction of the boundary radius.
inline ComplexVector random_interior_point(Rng& rng, const Symbol& f, double max_fraction = 0.95)
{
    ComplexVector u = random_complex_vector(rng, f.arity());
    while (u.norm() == 0.0)
        u = random_complex_vector(rng, f.arity());
    const double r = boundary_radius(f, u, 1e-12);
    return u.normalized() * (r * uniform_real(rng, 0.0, max_fraction));
}

inline FreePoly random_free_poly(Rng& rng, int n, int degree)
{
    FreePoly::Coefficients c;
    for (int len = 0; len <= degree; ++len) {
        const int count = uniform_int(rng, len == degree ? 1 : 0, 3);
        for (int k = 0; k < count; ++k)
            c[random_word(rng, n, len)] = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
    }
    return FreePoly(n, std::move(c));
}

/// Scale-permutation invariant of a symbol: for each word length, the sorted
/// list of coefficients normalized by the degree-one coefficients of their
/// letters. Equivalent symbols have equal invariants.
inline std::vector<std::vector<Rational>> normalized_profile(const Symbol& f)
{
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(f.degree()) + 1);
    for (const auto& [w, a] : f.coefficients()) {
        Rational c = a;
        for (int letter : w)
            c /= f.coefficient(Word::letter(letter));
        out[w.size()].push_back(c);
    }
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

} // namespace ncd::testing
