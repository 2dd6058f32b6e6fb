#include "ncdomain/classify.hpp"

#include "ncdomain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace ncd {

std::vector<Rational> solve_scales(const Symbol& f, const Symbol& g, const std::vector<int>& sigma)
{
    if (f.arity() != g.arity() || static_cast<int>(sigma.size()) != g.arity())
        throw DimensionError("solve_scales needs symbols and permutation of a common arity");
    std::vector<Rational> lambda;
    lambda.reserve(sigma.size());
    for (int j = 1; j <= g.arity(); ++j)
        lambda.push_back(f.coefficient(Word::letter(sigma[static_cast<std::size_t>(j - 1)])) /
                         g.coefficient(Word::letter(j)));
    return lambda;
}

namespace {

// First word (graded-lex) of supp(f) ∪ supp(h) where the coefficients differ.
std::optional<NoPermutation> first_mismatch(const Symbol& f, const Symbol& h, const std::vector<int>& sigma)
{
    auto fi = f.coefficients().begin();
    auto hi = h.coefficients().begin();
    const auto fe = f.coefficients().end();
    const auto he = h.coefficients().end();
    while (fi != fe || hi != he) {
        if (hi == he || (fi != fe && fi->first < hi->first))
            return NoPermutation{sigma, fi->first, Rational(0), fi->second};
        if (fi == fe || hi->first < fi->first)
            return NoPermutation{sigma, hi->first, hi->second, Rational(0)};
        if (fi->second != hi->second)
            return NoPermutation{sigma, fi->first, hi->second, fi->second};
        ++fi;
        ++hi;
    }
    return std::nullopt;
}

ClassificationResult classify_exhaustive(const Symbol& f, const Symbol& g)
{
    std::vector<int> sigma(static_cast<std::size_t>(g.arity()));
    std::iota(sigma.begin(), sigma.end(), 1);
    NoPermutation last;
    do {
        Witness w(sigma, solve_scales(f, g, sigma));
        const Symbol h = substitute(g, w);
        auto miss = first_mismatch(f, h, sigma);
        if (!miss)
            return {Equivalent{std::move(w)}};
        last = std::move(*miss);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {std::move(last)};
}

// Depth-first search over sigma(1), sigma(2), ... in increasing order.
// After fixing sigma(j) (and hence lambda_j), every word of g whose largest
// letter is j is relabeled and compared against f, and every word of f whose
// letters all lie in the assigned image and include sigma(j) must come from g.
class Search {
public:
    Search(const Symbol& f, const Symbol& g) : f_(f), g_(g), n_(g.arity())
    {
        by_max_letter_.resize(static_cast<std::size_t>(n_) + 1);
        for (const auto& [w, a] : g.coefficients())
            by_max_letter_[static_cast<std::size_t>(w.max_letter())].push_back(&w);
        preimage_.assign(static_cast<std::size_t>(n_) + 1, 0);
        used_.assign(static_cast<std::size_t>(n_) + 1, false);
    }

    ClassificationResult run()
    {
        if (descend(1))
            return {Equivalent{Witness(sigma_, lambda_)}};
        return {std::move(last_)};
    }

private:
    bool descend(int j)
    {
        if (j > n_)
            return verify_witness(f_, g_, Witness(sigma_, lambda_));
        for (int v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)])
                continue;
            assign(j, v);
            if (consistent(j) && descend(j + 1))
                return true;
            unassign(j, v);
        }
        return false;
    }

    void assign(int j, int v)
    {
        sigma_.push_back(v);
        lambda_.push_back(f_.coefficient(Word::letter(v)) / g_.coefficient(Word::letter(j)));
        used_[static_cast<std::size_t>(v)] = true;
        preimage_[static_cast<std::size_t>(v)] = j;
    }

    void unassign(int /*j*/, int v)
    {
        sigma_.pop_back();
        lambda_.pop_back();
        used_[static_cast<std::size_t>(v)] = false;
        preimage_[static_cast<std::size_t>(v)] = 0;
    }

    bool consistent(int j)
    {
        for (const Word* w : by_max_letter_[static_cast<std::size_t>(j)]) {
            std::vector<int> image;
            image.reserve(w->size());
            Rational expected = g_.coefficient(*w);
            for (int c : *w) {
                image.push_back(sigma_[static_cast<std::size_t>(c - 1)]);
                expected *= lambda_[static_cast<std::size_t>(c - 1)];
            }
            Word relabeled(std::move(image));
            Rational found = f_.coefficient(relabeled);
            if (found != expected) {
                last_ = NoPermutation{sigma_, std::move(relabeled), std::move(expected), std::move(found)};
                return false;
            }
        }
        const int fresh = sigma_.back();
        for (const auto& [w, a] : f_.coefficients()) {
            bool touches = false;
            bool covered = true;
            for (int c : w) {
                touches = touches || c == fresh;
                covered = covered && used_[static_cast<std::size_t>(c)];
            }
            if (!touches || !covered)
                continue;
            std::vector<int> source;
            source.reserve(w.size());
            for (int c : w)
                source.push_back(preimage_[static_cast<std::size_t>(c)]);
            if (!g_.contains(Word(std::move(source)))) {
                last_ = NoPermutation{sigma_, w, Rational(0), a};
                return false;
            }
        }
        return true;
    }

    const Symbol& f_;
    const Symbol& g_;
    int n_;
    std::vector<std::vector<const Word*>> by_max_letter_;
    std::vector<int> sigma_;
    std::vector<Rational> lambda_;
    std::vector<int> preimage_;
    std::vector<bool> used_;
    NoPermutation last_;
};

} // namespace

bool verify_witness(const Symbol& f, const Symbol& g, const Witness& w)
{
    if (f.arity() != g.arity() || w.size() != g.arity())
        throw DimensionError("verify_witness needs symbols and witness of a common arity");
    return substitute(g, w) == f;
}

ClassificationResult classify(const Symbol& f, const Symbol& g, const ClassifyOptions& opts)
{
    if (f.arity() != g.arity())
        return {ArityMismatch{f.arity(), g.arity()}};
    if (!opts.prune)
        return classify_exhaustive(f, g);
    return Search(f, g).run();
}

OperatorTuple witness_tuple(const Symbol& g, const Witness& w, int depth, std::size_t cap)
{
    if (w.size() != g.arity())
        throw DimensionError("witness size does not match symbol arity");
    ShiftFamily family = build_shifts(g, depth, cap);
    std::vector<SparseComplexMatrix> ops(static_cast<std::size_t>(g.arity()));
    for (int i = 1; i <= g.arity(); ++i) {
        const double scale = 1.0 / std::sqrt(w.scale(i).get_d());
        ops[static_cast<std::size_t>(w.image(i) - 1)] = Complex(scale, 0.0) * family.shift(i).to_sparse();
    }
    return OperatorTuple(std::move(ops));
}

MembershipReport operator_witness_check(const Symbol& f, const Symbol& g, const Witness& w, int depth, double tol,
                                        std::size_t cap)
{
    if (f.arity() != g.arity() || w.size() != g.arity())
        throw PreconditionError("witness arity does not match the symbols");
    if (!verify_witness(f, g, w))
        throw PreconditionError("witness does not carry g onto f");
    if (depth < f.degree())
        throw PreconditionError("truncation level " + std::to_string(depth) + " is below deg f = " +
                                std::to_string(f.degree()));
    return is_member(f, witness_tuple(g, w, depth, cap), tol);
}

} // namespace ncd
