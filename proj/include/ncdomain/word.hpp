#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncd {

/// An element of the free semigroup on the letters {1, 2, ...}.
///
/// Letters are 1-based. The empty word is the neutral element. Words compare
/// in graded-lexicographic order: shorter words first, then lexicographically
/// on the letters.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters);

    /// Single-letter word j.
    static Word letter(int j);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    std::span<const int> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Largest letter appearing, 0 for the empty word.
    int max_letter() const noexcept;

    /// First k letters.
    Word prefix(std::size_t k) const;
    /// Letters from position k to the end.
    Word suffix_from(std::size_t k) const;

    /// j·this
    Word prepend(int j) const;

    /// Letter string such as "X1X2X1"; the empty word prints as "1".
    std::string to_string() const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<int> letters_;
};

} // namespace ncd
