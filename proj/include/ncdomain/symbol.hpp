#pragma once

#include "ncdomain/rational.hpp"
#include "ncdomain/word.hpp"

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ncd {

using Complex = std::complex<double>;

/// A positive regular free polynomial f = sum a_w X_w over n noncommuting
/// variables: no constant term, nonnegative coefficients, and every degree-one
/// term X_j present with a strictly positive coefficient.
///
/// Only strictly positive coefficients are stored, keyed in graded-lex order.
/// Instances can only be obtained through validate() / parse_symbol(), so a
/// Symbol in hand always satisfies the invariants above.
class Symbol {
public:
    using Coefficients = std::map<Word, Rational>;

    int arity() const noexcept { return arity_; }
    /// Longest word in the support.
    int degree() const noexcept;
    std::size_t size() const noexcept { return coeffs_.size(); }

    const Coefficients& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of w, zero when w is not in the support.
    Rational coefficient(const Word& w) const;
    bool contains(const Word& w) const { return coeffs_.contains(w); }

    friend bool operator==(const Symbol&, const Symbol&) = default;

private:
    Symbol(int arity, Coefficients coeffs) : arity_(arity), coeffs_(std::move(coeffs)) {}
    friend Symbol validate(int n, const std::map<Word, Rational>& coeffs);

    int arity_ = 0;
    Coefficients coeffs_;
};

/// Checks the symbol invariants and drops zero coefficients.
/// Throws ValidationError naming the first offending word.
Symbol validate(int n, const std::map<Word, Rational>& coeffs);

/// Parses the textual form, e.g. "vars=2; X1 + 1/2 X2 + 0.25*X1X2".
/// Duplicate monomials are summed before validation.
Symbol parse_symbol(std::string_view text);

/// Canonical text: graded-lex ordered "c*X.." terms joined by " + ".
std::string format(const Symbol& f);

/// A permutation sigma of {1..n} (stored as the images sigma(1)..sigma(n))
/// together with strictly positive scales lambda_1..lambda_n.
class Witness {
public:
    Witness(std::vector<int> sigma, std::vector<Rational> lambda);

    static Witness identity(int n);

    int size() const noexcept { return static_cast<int>(sigma_.size()); }
    const std::vector<int>& sigma() const noexcept { return sigma_; }
    const std::vector<Rational>& lambda() const noexcept { return lambda_; }
    /// sigma(j) for 1-based j.
    int image(int j) const { return sigma_[static_cast<std::size_t>(j - 1)]; }
    /// lambda_j for 1-based j.
    const Rational& scale(int j) const { return lambda_[static_cast<std::size_t>(j - 1)]; }

    /// (sigma^-1, (1/lambda_{sigma^-1(j)})_j); undoes substitute().
    Witness inverse() const;

    friend bool operator==(const Witness&, const Witness&) = default;

private:
    std::vector<int> sigma_;
    std::vector<Rational> lambda_;
};

/// Witness w with substitute(h, w) == substitute(substitute(h, inner), outer).
Witness compose(const Witness& outer, const Witness& inner);

/// g(lambda_1 X_sigma(1), ..., lambda_n X_sigma(n)), computed exactly.
Symbol substitute(const Symbol& g, const Witness& w);

/// An arbitrary element of the free algebra with complex double coefficients.
/// The constant term (empty word) is allowed.
class FreePoly {
public:
    using Coefficients = std::map<Word, Complex>;

    FreePoly(int arity, Coefficients coeffs);

    static FreePoly from_symbol(const Symbol& f);

    int arity() const noexcept { return arity_; }
    int degree() const noexcept;
    const Coefficients& coefficients() const noexcept { return coeffs_; }

private:
    int arity_;
    Coefficients coeffs_;
};

} // namespace ncd
