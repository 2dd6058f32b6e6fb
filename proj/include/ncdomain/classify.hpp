#pragma once

#include "ncdomain/fock.hpp"
#include "ncdomain/symbol.hpp"

#include <variant>
#include <vector>

namespace ncd {

/// Scales forced by the degree-one coefficients: lambda_j = a^f_{sigma(j)} / a^g_j.
std::vector<Rational> solve_scales(const Symbol& f, const Symbol& g, const std::vector<int>& sigma);

/// substitute(g, w) == f, exactly.
bool verify_witness(const Symbol& f, const Symbol& g, const Witness& w);

struct ArityMismatch {
    int n = 0;
    int m = 0;
    friend bool operator==(const ArityMismatch&, const ArityMismatch&) = default;
};

/// Refutation of the last assignment examined. `sigma` lists sigma(1)..sigma(k)
/// and may be a proper prefix when the search pruned a partial assignment.
/// `word` is written in f's letters; `expected` is the coefficient the
/// substituted g puts there and `found` the coefficient of f.
struct NoPermutation {
    std::vector<int> sigma;
    Word word;
    Rational expected;
    Rational found;
    friend bool operator==(const NoPermutation&, const NoPermutation&) = default;
};

struct Equivalent {
    Witness witness;
    friend bool operator==(const Equivalent&, const Equivalent&) = default;
};

struct ClassificationResult {
    std::variant<Equivalent, ArityMismatch, NoPermutation> verdict;

    bool equivalent() const noexcept { return std::holds_alternative<Equivalent>(verdict); }
    /// Throws std::bad_variant_access unless equivalent().
    const Witness& witness() const { return std::get<Equivalent>(verdict).witness; }

    friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

struct ClassifyOptions {
    /// Backtracking over partial letter assignments with support pruning.
    /// When false, every permutation is checked in full.
    bool prune = true;
};

/// Decides whether f = g(lambda_1 X_sigma(1), ..., lambda_n X_sigma(n)) for some
/// permutation sigma and positive scales. Returns the lexicographically least
/// valid sigma with its forced scales.
ClassificationResult classify(const Symbol& f, const Symbol& g, const ClassifyOptions& opts = {});

/// Realizes the witness on operators: the tuple
///   T_{sigma(i)} = lambda_i^{-1/2} W^g_i
/// built from g's truncated shifts must lie in the domain of f.
/// Throws PreconditionError when the witness does not verify or N < deg f.
MembershipReport operator_witness_check(const Symbol& f, const Symbol& g, const Witness& w, int depth,
                                        double tol = kDefaultMembershipTolerance,
                                        std::size_t cap = kDefaultDimensionCap);

/// T as used by operator_witness_check, exposed for inspection.
OperatorTuple witness_tuple(const Symbol& g, const Witness& w, int depth,
                            std::size_t cap = kDefaultDimensionCap);

} // namespace ncd
