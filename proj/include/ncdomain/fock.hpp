#pragma once

#include "ncdomain/rational.hpp"
#include "ncdomain/symbol.hpp"
#include "ncdomain/word.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ncd {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using SparseComplexMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr std::size_t kDefaultDimensionCap = 200000;
inline constexpr double kDefaultMembershipTolerance = 1e-9;

/// Number of words of length <= depth over n letters, or nullopt past `cap`.
std::optional<std::size_t> fock_dimension(int n, int depth, std::size_t cap = kDefaultDimensionCap);

/// Basis of the Fock space truncated at word length N, in graded-lex order.
///
/// Index 0 is the empty word. Within a level the order is the base-n numeral
/// order of the letters, so indices are computed arithmetically.
class FockIndex {
public:
    FockIndex(int n, int depth, std::size_t cap = kDefaultDimensionCap);

    int arity() const noexcept { return n_; }
    int depth() const noexcept { return depth_; }
    std::size_t dimension() const noexcept { return words_.size(); }

    const Word& word(std::size_t index) const { return words_.at(index); }
    std::span<const Word> words() const noexcept { return words_; }

    /// Index of w; nullopt when w is longer than the depth or uses a letter > n.
    std::optional<std::size_t> find(const Word& w) const;
    /// Index of w; throws DimensionError when absent.
    std::size_t index(const Word& w) const;

    /// First index of words of length k (k may be depth + 1, giving dimension()).
    std::size_t level_offset(int k) const { return offsets_.at(static_cast<std::size_t>(k)); }
    int level(std::size_t index) const;

    /// Index of j·word(index). Requires level(index) < depth.
    std::size_t prepend(int j, std::size_t index) const;

private:
    int n_;
    int depth_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> powers_;
    std::vector<Word> words_;
};

FockIndex enumerate_words(int n, int depth, std::size_t cap = kDefaultDimensionCap);

/// Exact weights b_w for every word of length <= N; b of the empty word is 1.
class WeightTable {
public:
    WeightTable(FockIndex index, std::vector<Rational> weights);

    const FockIndex& index() const noexcept { return index_; }
    const Rational& at(std::size_t i) const { return weights_.at(i); }
    const Rational& weight(const Word& w) const { return weights_.at(index_.index(w)); }
    std::span<const Rational> values() const noexcept { return weights_; }

private:
    FockIndex index_;
    std::vector<Rational> weights_;
};

/// Weight table by the prefix recursion
///   b_w = sum over nonempty prefixes u of w in supp(f) of a_u * b_{w without u}.
WeightTable compute_weights(const Symbol& f, int depth, std::size_t cap = kDefaultDimensionCap);

/// Sum over all ordered factorizations of w into nonempty words of the
/// product of the factors' coefficients. Exponential in |w|; used as an
/// independent check of compute_weights.
Rational brute_force_weight(const Symbol& f, const Word& w);

/// Square matrix with at most one nonzero per column, stored column-wise.
class ShiftOperator {
public:
    static constexpr std::int64_t kEmpty = -1;

    explicit ShiftOperator(std::size_t dimension);

    std::size_t dimension() const noexcept { return rows_.size(); }
    /// Row of the nonzero in `col`, or kEmpty.
    std::int64_t row(std::size_t col) const { return rows_.at(col); }
    double value(std::size_t col) const { return values_.at(col); }
    void set(std::size_t col, std::size_t row, double value);

    double entry(std::size_t row, std::size_t col) const;
    std::size_t nonzeros() const;

    ComplexVector apply(const ComplexVector& x) const;
    ComplexVector apply_adjoint(const ComplexVector& x) const;
    SparseComplexMatrix to_sparse() const;

private:
    std::vector<std::int64_t> rows_;
    std::vector<double> values_;
};

/// Truncated universal weighted shifts W_1..W_n, compressed to words of length <= N.
struct ShiftFamily {
    WeightTable weights;
    std::vector<ShiftOperator> shifts;

    const FockIndex& index() const noexcept { return weights.index(); }
    const ShiftOperator& shift(int j) const { return shifts.at(static_cast<std::size_t>(j - 1)); }
};

/// W_j e_w = sqrt(b_w / b_{jw}) e_{jw} for |w| < N; columns at level N are zero.
ShiftFamily build_shifts(const Symbol& f, int depth, std::size_t cap = kDefaultDimensionCap);

/// n square complex operators of a common dimension, stored sparse.
class OperatorTuple {
public:
    explicit OperatorTuple(std::vector<SparseComplexMatrix> ops);

    static OperatorTuple from_dense(const std::vector<ComplexMatrix>& ops);
    static OperatorTuple from_shifts(const ShiftFamily& family);
    /// 1x1 tuple (lambda_1, ..., lambda_n).
    static OperatorTuple from_point(const ComplexVector& point);

    int arity() const noexcept { return static_cast<int>(ops_.size()); }
    Eigen::Index dimension() const noexcept { return dim_; }
    /// T_j for 1-based j.
    const SparseComplexMatrix& op(int j) const { return ops_.at(static_cast<std::size_t>(j - 1)); }

    /// T_w = T_{w_1} ... T_{w_k}; identity for the empty word.
    SparseComplexMatrix word(const Word& w) const;

private:
    std::vector<SparseComplexMatrix> ops_;
    Eigen::Index dim_ = 0;
};

/// sum_w p_w T_w
ComplexMatrix eval_poly(const FreePoly& p, const OperatorTuple& t);

/// I - sum_w a_w T_w T_w^*, symmetrized to be exactly Hermitian.
ComplexMatrix defect(const Symbol& f, const OperatorTuple& t);

struct MembershipReport {
    double min_eig = 0.0;
    double tolerance = kDefaultMembershipTolerance;
    bool member = false;
    std::size_t dimension = 0;

    friend bool operator==(const MembershipReport&, const MembershipReport&) = default;
};

/// Membership of t in the domain of f: min eigenvalue of the defect >= -tol.
MembershipReport is_member(const Symbol& f, const OperatorTuple& t,
                           double tol = kDefaultMembershipTolerance);

/// p(lambda) by scalar substitution.
Complex eval_scalar(const FreePoly& p, const ComplexVector& point);

/// z with coordinate conj(lambda)^w * sqrt(b_w) at e_w, for |w| <= N.
ComplexVector coherent_vector(const Symbol& f, const ComplexVector& point, int depth,
                              std::size_t cap = kDefaultDimensionCap);

struct CharacterCheck {
    Complex operator_value;
    Complex scalar_value;
    double difference = 0.0;
};

/// Compares <p(W) e_empty, z_lambda> against p(lambda). Requires N >= deg p.
CharacterCheck char_eval_check(const Symbol& f, const ComplexVector& point, const FreePoly& p,
                               int depth, std::size_t cap = kDefaultDimensionCap);

} // namespace ncd
