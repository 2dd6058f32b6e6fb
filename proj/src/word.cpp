#include "ncdomain/word.hpp"

#include "ncdomain/errors.hpp"

#include <algorithm>

namespace ncd {

Word::Word(std::vector<int> letters) : letters_(std::move(letters))
{
    for (int c : letters_)
        if (c < 1)
            throw ValidationError(ValidationError::Kind::LetterOutOfRange,
                                  "word letters must be >= 1, got " + std::to_string(c));
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word Word::letter(int j) { return Word(std::vector<int>{j}); }

int Word::max_letter() const noexcept
{
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::prefix(std::size_t k) const
{
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(k, size())));
    return w;
}

Word Word::suffix_from(std::size_t k) const
{
    Word w;
    if (k < size())
        w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
    return w;
}

Word Word::prepend(int j) const
{
    std::vector<int> out;
    out.reserve(size() + 1);
    out.push_back(j);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

std::string Word::to_string() const
{
    if (letters_.empty())
        return "1";
    std::string s;
    for (int c : letters_) {
        s += 'X';
        s += std::to_string(c);
    }
    return s;
}

Word operator+(const Word& a, const Word& b)
{
    Word w;
    w.letters_.reserve(a.size() + b.size());
    w.letters_.insert(w.letters_.end(), a.letters_.begin(), a.letters_.end());
    w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
    return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

} // namespace ncd
