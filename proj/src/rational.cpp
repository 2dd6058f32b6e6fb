#include "ncdomain/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncd {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class integer_from(std::string_view digits)
{
    return mpz_class(std::string(digits), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
        mpz_class d = integer_from(den);
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(integer_from(num), d);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational r(integer_from(digits), scale);
        r.canonicalize();
        return r;
    }
    if (!all_digits(text))
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    return Rational(integer_from(text));
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string numerator_string(const Rational& r) { return r.get_num().get_str(); }

std::string denominator_string(const Rational& r) { return r.get_den().get_str(); }

Rational rational_from_strings(const std::string& num, const std::string& den)
{
    mpz_class n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw std::invalid_argument("malformed rational " + num + "/" + den);
    if (d == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace ncd
