// Recursive-descent reader for symbol text:
//
//   symbol  := [header] term ( ('+' | '-') term )*
//   header  := 'vars' '=' integer ';'
//   term    := ['-'] coeff ['*'] word | ['-'] word | ['-'] coeff
//   word    := ( 'X' integer )+
//   coeff   := integer | decimal | integer '/' integer
//
// Minus signs and bare constants are accepted syntactically so that
// validate() can report them as domain errors rather than syntax errors.

#include "ncdomain/errors.hpp"
#include "ncdomain/symbol.hpp"

#include <cctype>
#include <optional>

namespace ncd {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Symbol run()
    {
        std::optional<int> vars = header();
        std::map<Word, Rational> coeffs;
        bool negative = accept('-');
        term(coeffs, negative);
        for (;;) {
            skip_ws();
            if (at_end())
                break;
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                fail("expected '+' or '-' between terms");
            term(coeffs, negative);
        }

        int n = vars.value_or(1);
        if (!vars)
            for (const auto& [w, a] : coeffs)
                n = std::max(n, w.max_letter());
        return validate(n, coeffs);
    }

private:
    std::optional<int> header()
    {
        skip_ws();
        if (text_.substr(pos_, 4) != "vars")
            return std::nullopt;
        pos_ += 4;
        expect('=');
        skip_ws();
        const std::size_t at = pos_;
        auto digits = read_digits();
        if (digits.empty())
            fail("expected integer after 'vars='");
        if (digits.size() > 6)
            fail("variable count too large", at);
        expect(';');
        int n = std::stoi(std::string(digits));
        if (n < 1)
            fail("variable count must be positive", at);
        return n;
    }

    void term(std::map<Word, Rational>& coeffs, bool negative)
    {
        skip_ws();
        Rational c(1);
        bool has_coeff = false;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
            c = coefficient();
            has_coeff = true;
        }
        bool star = has_coeff && accept('*');
        skip_ws();
        Word w;
        if (!at_end() && peek() == 'X') {
            w = word();
        } else if (!has_coeff || star) {
            fail("expected a monomial such as X1");
        }
        if (negative)
            c = -c;
        coeffs[w] += c;
    }

    Rational coefficient()
    {
        const std::size_t at = pos_;
        auto whole = read_digits();
        if (!at_end() && peek() == '.') {
            ++pos_;
            auto frac = read_digits();
            if (whole.empty() && frac.empty())
                fail("malformed decimal", at);
            return parse_rational(std::string(whole) + "." + std::string(frac));
        }
        if (accept('/')) {
            skip_ws();
            const std::size_t den_at = pos_;
            auto den = read_digits();
            if (den.empty())
                fail("expected denominator", den_at);
            Rational r;
            try {
                r = parse_rational(std::string(whole) + "/" + std::string(den));
            } catch (const std::invalid_argument& e) {
                fail(e.what(), den_at);
            }
            return r;
        }
        return parse_rational(whole);
    }

    Word word()
    {
        std::vector<int> letters;
        for (;;) {
            skip_ws();
            if (at_end() || peek() != 'X')
                break;
            const std::size_t at = pos_;
            ++pos_;
            auto digits = read_digits();
            if (digits.empty())
                fail("expected variable index after 'X'", at);
            if (digits.size() > 6)
                fail("variable index too large", at);
            int letter = std::stoi(std::string(digits));
            if (letter < 1)
                fail("variable indices start at 1", at);
            letters.push_back(letter);
        }
        return Word(std::move(letters));
    }

    std::string_view read_digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) { throw ParseError(message, at); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Symbol parse_symbol(std::string_view text) { return Parser(text).run(); }

} // namespace ncd
