#include "ncdomain/symbol.hpp"

#include "ncdomain/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ncd {

using Kind = ValidationError::Kind;

int Symbol::degree() const noexcept
{
    // Graded-lex keys: the last entry is a longest word.
    return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.rbegin()->first.size());
}

Rational Symbol::coefficient(const Word& w) const
{
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Symbol validate(int n, const std::map<Word, Rational>& coeffs)
{
    if (n < 1)
        throw ValidationError(Kind::BadArity, "arity must be positive, got " + std::to_string(n));

    Symbol::Coefficients kept;
    for (const auto& [w, a] : coeffs) {
        if (w.empty() && a != 0)
            throw ValidationError(Kind::EmptyWordTerm, "constant term must be zero, got " + to_string(a));
        if (a < 0)
            throw ValidationError(Kind::NegativeCoefficient,
                                  "negative coefficient " + to_string(a) + " on " + w.to_string());
        if (w.max_letter() > n)
            throw ValidationError(Kind::LetterOutOfRange, "word " + w.to_string() + " uses a letter beyond X" +
                                                              std::to_string(n));
        if (a > 0)
            kept.emplace(w, a);
    }
    for (int j = 1; j <= n; ++j) {
        if (!kept.contains(Word::letter(j)))
            throw ValidationError(Kind::DegreeOneNotPositive,
                                  "missing degree-1 term X" + std::to_string(j) + " (coefficient must be > 0)");
    }
    return Symbol(n, std::move(kept));
}

std::string format(const Symbol& f)
{
    std::string out;
    for (const auto& [w, a] : f.coefficients()) {
        if (!out.empty())
            out += " + ";
        out += to_string(a);
        out += '*';
        out += w.to_string();
    }
    return out;
}

Witness::Witness(std::vector<int> sigma, std::vector<Rational> lambda)
    : sigma_(std::move(sigma)), lambda_(std::move(lambda))
{
    const auto n = sigma_.size();
    if (lambda_.size() != n)
        throw DimensionError("witness has " + std::to_string(n) + " images but " + std::to_string(lambda_.size()) +
                             " scales");
    std::vector<bool> seen(n + 1, false);
    for (int s : sigma_) {
        if (s < 1 || static_cast<std::size_t>(s) > n || seen[static_cast<std::size_t>(s)])
            throw PreconditionError("witness sigma is not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(s)] = true;
    }
    for (const auto& l : lambda_)
        if (l <= 0)
            throw PreconditionError("witness scales must be strictly positive, got " + to_string(l));
}

Witness Witness::identity(int n)
{
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    return Witness(std::move(sigma), std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

Witness Witness::inverse() const
{
    const auto n = sigma_.size();
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[static_cast<std::size_t>(sigma_[i] - 1)] = static_cast<int>(i + 1);
    std::vector<Rational> scales(n);
    for (std::size_t j = 0; j < n; ++j)
        scales[j] = 1 / lambda_[static_cast<std::size_t>(inv[j] - 1)];
    return Witness(std::move(inv), std::move(scales));
}

Witness compose(const Witness& outer, const Witness& inner)
{
    if (outer.size() != inner.size())
        throw DimensionError("cannot compose witnesses of different sizes");
    const int n = inner.size();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<Rational> lambda(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int mid = inner.image(i);
        sigma[static_cast<std::size_t>(i - 1)] = outer.image(mid);
        lambda[static_cast<std::size_t>(i - 1)] = inner.scale(i) * outer.scale(mid);
    }
    return Witness(std::move(sigma), std::move(lambda));
}

Symbol substitute(const Symbol& g, const Witness& w)
{
    if (w.size() != g.arity())
        throw DimensionError("witness size " + std::to_string(w.size()) + " does not match arity " +
                             std::to_string(g.arity()));
    std::map<Word, Rational> out;
    for (const auto& [word, a] : g.coefficients()) {
        std::vector<int> image;
        image.reserve(word.size());
        Rational c = a;
        for (int letter : word) {
            image.push_back(w.image(letter));
            c *= w.scale(letter);
        }
        out[Word(std::move(image))] += c;
    }
    return validate(g.arity(), out);
}

FreePoly::FreePoly(int arity, Coefficients coeffs) : arity_(arity), coeffs_(std::move(coeffs))
{
    if (arity_ < 1)
        throw DimensionError("polynomial arity must be positive");
    for (const auto& [w, c] : coeffs_)
        if (w.max_letter() > arity_)
            throw DimensionError("word " + w.to_string() + " exceeds arity " + std::to_string(arity_));
}

FreePoly FreePoly::from_symbol(const Symbol& f)
{
    Coefficients c;
    for (const auto& [w, a] : f.coefficients())
        c.emplace(w, Complex(a.get_d(), 0.0));
    return FreePoly(f.arity(), std::move(c));
}

int FreePoly::degree() const noexcept
{
    int d = 0;
    for (const auto& [w, c] : coeffs_)
        d = std::max(d, static_cast<int>(w.size()));
    return d;
}

} // namespace ncd
