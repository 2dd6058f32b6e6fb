#include "ncdomain/fock.hpp"

#include "ncdomain/errors.hpp"
#include "ncdomain/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace ncd {

std::optional<std::size_t> fock_dimension(int n, int depth, std::size_t cap)
{
    if (n < 1 || depth < 0)
        return std::nullopt;
    std::size_t total = 0;
    std::size_t level = 1;
    for (int k = 0; k <= depth; ++k) {
        total += level;
        if (total > cap)
            return std::nullopt;
        if (k < depth) {
            if (level > cap / static_cast<std::size_t>(n))
                return std::nullopt;
            level *= static_cast<std::size_t>(n);
        }
    }
    return total;
}

FockIndex::FockIndex(int n, int depth, std::size_t cap) : n_(n), depth_(depth)
{
    if (n < 1)
        throw PreconditionError("Fock space arity must be positive");
    if (depth < 0)
        throw PreconditionError("truncation level must be nonnegative");
    if (!fock_dimension(n, depth, cap))
        throw ResourceLimitError("Fock space over " + std::to_string(n) + " letters truncated at length " +
                                 std::to_string(depth) + " exceeds the dimension cap of " + std::to_string(cap));

    const auto un = static_cast<std::size_t>(n);
    powers_.assign(static_cast<std::size_t>(depth) + 2, 1);
    offsets_.assign(static_cast<std::size_t>(depth) + 2, 0);
    for (std::size_t k = 1; k < powers_.size(); ++k) {
        offsets_[k] = offsets_[k - 1] + powers_[k - 1];
        if (k < powers_.size() - 1)
            powers_[k] = powers_[k - 1] * un;
    }

    words_.reserve(offsets_.back());
    std::vector<int> letters;
    for (int k = 0; k <= depth; ++k) {
        letters.assign(static_cast<std::size_t>(k), 1);
        for (std::size_t count = 0; count < powers_[static_cast<std::size_t>(k)]; ++count) {
            words_.emplace_back(letters);
            // Increment as a base-n numeral with digits 1..n.
            for (int pos = k - 1; pos >= 0; --pos) {
                auto& d = letters[static_cast<std::size_t>(pos)];
                if (d < n) {
                    ++d;
                    break;
                }
                d = 1;
            }
        }
    }
}

std::optional<std::size_t> FockIndex::find(const Word& w) const
{
    if (w.size() > static_cast<std::size_t>(depth_))
        return std::nullopt;
    std::size_t pos = 0;
    for (int c : w) {
        if (c > n_)
            return std::nullopt;
        pos = pos * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c - 1);
    }
    return offsets_[w.size()] + pos;
}

std::size_t FockIndex::index(const Word& w) const
{
    if (auto i = find(w))
        return *i;
    throw DimensionError("word " + w.to_string() + " is outside the truncated Fock space");
}

int FockIndex::level(std::size_t index) const
{
    if (index >= dimension())
        throw DimensionError("Fock index out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

std::size_t FockIndex::prepend(int j, std::size_t index) const
{
    const int k = level(index);
    if (k >= depth_)
        throw DimensionError("prepending to a word at the truncation level");
    if (j < 1 || j > n_)
        throw DimensionError("letter out of range");
    const auto uk = static_cast<std::size_t>(k);
    return offsets_[uk + 1] + static_cast<std::size_t>(j - 1) * powers_[uk] + (index - offsets_[uk]);
}

FockIndex enumerate_words(int n, int depth, std::size_t cap) { return FockIndex(n, depth, cap); }

WeightTable::WeightTable(FockIndex index, std::vector<Rational> weights)
    : index_(std::move(index)), weights_(std::move(weights))
{
    if (weights_.size() != index_.dimension())
        throw DimensionError("weight table size does not match the Fock dimension");
}

WeightTable compute_weights(const Symbol& f, int depth, std::size_t cap)
{
    FockIndex index(f.arity(), depth, cap);
    const auto n = static_cast<std::size_t>(f.arity());

    // Support words that fit, keyed by level and position within the level.
    std::vector<std::unordered_map<std::size_t, const Rational*>> support(static_cast<std::size_t>(depth) + 1);
    for (const auto& [w, a] : f.coefficients())
        if (auto i = index.find(w))
            support[w.size()].emplace(*i - index.level_offset(static_cast<int>(w.size())), &a);

    std::vector<std::size_t> power(static_cast<std::size_t>(depth) + 1, 1);
    for (std::size_t k = 1; k < power.size(); ++k)
        power[k] = power[k - 1] * n;

    std::vector<Rational> b(index.dimension());
    b[0] = 1;
    for (int k = 1; k <= depth; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const std::size_t base = index.level_offset(k);
        for (std::size_t pos = 0; pos < power[uk]; ++pos) {
            Rational sum(0);
            for (std::size_t len = 1; len <= uk; ++len) {
                const auto& level = support[len];
                if (level.empty())
                    continue;
                const std::size_t rest = uk - len;
                auto hit = level.find(pos / power[rest]);
                if (hit == level.end())
                    continue;
                const std::size_t suffix = index.level_offset(static_cast<int>(rest)) + pos % power[rest];
                sum += *hit->second * b[suffix];
            }
            b[base + pos] = std::move(sum);
        }
    }
    return WeightTable(std::move(index), std::move(b));
}

Rational brute_force_weight(const Symbol& f, const Word& w)
{
    if (w.empty())
        return Rational(1);
    if (w.size() > 24)
        throw ResourceLimitError("brute-force weight limited to words of length <= 24");

    // Bit i of `cuts` set means a factor boundary after letter i.
    const std::size_t k = w.size();
    const std::uint32_t combos = 1u << (k - 1);
    Rational total(0);
    for (std::uint32_t cuts = 0; cuts < combos; ++cuts) {
        Rational product(1);
        std::size_t start = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const bool boundary = i == k - 1 || ((cuts >> i) & 1u);
            if (!boundary)
                continue;
            std::vector<int> piece(w.begin() + static_cast<std::ptrdiff_t>(start),
                                   w.begin() + static_cast<std::ptrdiff_t>(i + 1));
            product *= f.coefficient(Word(std::move(piece)));
            if (product == 0)
                break;
            start = i + 1;
        }
        total += product;
    }
    return total;
}

ShiftOperator::ShiftOperator(std::size_t dimension) : rows_(dimension, kEmpty), values_(dimension, 0.0) {}

void ShiftOperator::set(std::size_t col, std::size_t row, double value)
{
    if (col >= dimension() || row >= dimension())
        throw DimensionError("shift entry out of range");
    rows_[col] = static_cast<std::int64_t>(row);
    values_[col] = value;
}

double ShiftOperator::entry(std::size_t row, std::size_t col) const
{
    return rows_.at(col) == static_cast<std::int64_t>(row) ? values_[col] : 0.0;
}

std::size_t ShiftOperator::nonzeros() const
{
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](auto r) { return r != kEmpty; }));
}

ComplexVector ShiftOperator::apply(const ComplexVector& x) const
{
    if (static_cast<std::size_t>(x.size()) != dimension())
        throw DimensionError("vector size does not match shift dimension");
    ComplexVector y = ComplexVector::Zero(x.size());
    for (std::size_t c = 0; c < rows_.size(); ++c)
        if (rows_[c] != kEmpty)
            y[rows_[c]] += values_[c] * x[static_cast<Eigen::Index>(c)];
    return y;
}

ComplexVector ShiftOperator::apply_adjoint(const ComplexVector& x) const
{
    if (static_cast<std::size_t>(x.size()) != dimension())
        throw DimensionError("vector size does not match shift dimension");
    ComplexVector y = ComplexVector::Zero(x.size());
    for (std::size_t c = 0; c < rows_.size(); ++c)
        if (rows_[c] != kEmpty)
            y[static_cast<Eigen::Index>(c)] = values_[c] * x[rows_[c]];
    return y;
}

SparseComplexMatrix ShiftOperator::to_sparse() const
{
    const auto d = static_cast<Eigen::Index>(dimension());
    SparseComplexMatrix m(d, d);
    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(dimension());
    for (std::size_t c = 0; c < rows_.size(); ++c)
        if (rows_[c] != kEmpty)
            entries.emplace_back(rows_[c], static_cast<Eigen::Index>(c), Complex(values_[c], 0.0));
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

ShiftFamily build_shifts(const Symbol& f, int depth, std::size_t cap)
{
    if (depth < 1)
        throw PreconditionError("shift truncation level must be at least 1");
    WeightTable weights = compute_weights(f, depth, cap);
    const FockIndex& index = weights.index();
    const std::size_t top = index.level_offset(depth);

    std::vector<ShiftOperator> shifts;
    shifts.reserve(static_cast<std::size_t>(f.arity()));
    for (int j = 1; j <= f.arity(); ++j) {
        ShiftOperator w(index.dimension());
        for (std::size_t col = 0; col < top; ++col) {
            const std::size_t row = index.prepend(j, col);
            const Rational ratio = weights.at(col) / weights.at(row);
            w.set(col, row, std::sqrt(ratio.get_d()));
        }
        shifts.push_back(std::move(w));
    }
    return ShiftFamily{std::move(weights), std::move(shifts)};
}

OperatorTuple::OperatorTuple(std::vector<SparseComplexMatrix> ops) : ops_(std::move(ops))
{
    if (ops_.empty())
        throw DimensionError("operator tuple must be nonempty");
    dim_ = ops_.front().rows();
    for (const auto& m : ops_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionError("operator tuple entries must be square of a common dimension");
    for (auto& m : ops_)
        m.makeCompressed();
}

OperatorTuple OperatorTuple::from_dense(const std::vector<ComplexMatrix>& ops)
{
    std::vector<SparseComplexMatrix> sparse;
    sparse.reserve(ops.size());
    for (const auto& m : ops) {
        SparseComplexMatrix s(m.rows(), m.cols());
        std::vector<Eigen::Triplet<Complex>> entries;
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                if (m(r, c) != Complex(0.0))
                    entries.emplace_back(r, c, m(r, c));
        s.setFromTriplets(entries.begin(), entries.end());
        sparse.push_back(std::move(s));
    }
    return OperatorTuple(std::move(sparse));
}

OperatorTuple OperatorTuple::from_shifts(const ShiftFamily& family)
{
    std::vector<SparseComplexMatrix> ops;
    ops.reserve(family.shifts.size());
    for (const auto& w : family.shifts)
        ops.push_back(w.to_sparse());
    return OperatorTuple(std::move(ops));
}

OperatorTuple OperatorTuple::from_point(const ComplexVector& point)
{
    std::vector<ComplexMatrix> ops;
    for (Eigen::Index j = 0; j < point.size(); ++j)
        ops.push_back(ComplexMatrix::Constant(1, 1, point[j]));
    return from_dense(ops);
}

SparseComplexMatrix OperatorTuple::word(const Word& w) const
{
    if (w.max_letter() > arity())
        throw DimensionError("word " + w.to_string() + " exceeds tuple arity " + std::to_string(arity()));
    SparseComplexMatrix out(dim_, dim_);
    if (w.empty()) {
        out.setIdentity();
        return out;
    }
    out = op(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        out = (out * op(w[i])).pruned();
    return out;
}

ComplexMatrix eval_poly(const FreePoly& p, const OperatorTuple& t)
{
    if (p.arity() != t.arity())
        throw DimensionError("polynomial arity " + std::to_string(p.arity()) + " does not match tuple arity " +
                             std::to_string(t.arity()));
    ComplexMatrix out = ComplexMatrix::Zero(t.dimension(), t.dimension());
    for (const auto& [w, c] : p.coefficients())
        out += c * ComplexMatrix(t.word(w));
    return out;
}

ComplexMatrix defect(const Symbol& f, const OperatorTuple& t)
{
    if (f.arity() != t.arity())
        throw DimensionError("symbol arity " + std::to_string(f.arity()) + " does not match tuple arity " +
                             std::to_string(t.arity()));
    const Eigen::Index d = t.dimension();
    SparseComplexMatrix sum(d, d);
    for (const auto& [w, a] : f.coefficients()) {
        SparseComplexMatrix tw = t.word(w);
        SparseComplexMatrix gram = tw * SparseComplexMatrix(tw.adjoint());
        sum += Complex(a.get_d(), 0.0) * gram;
    }
    ComplexMatrix delta = ComplexMatrix::Identity(d, d) - ComplexMatrix(sum);
    return (delta + delta.adjoint()) * 0.5;
}

MembershipReport is_member(const Symbol& f, const OperatorTuple& t, double tol)
{
    if (!(tol > 0.0))
        throw PreconditionError("membership tolerance must be positive");
    const double m = min_eig_hermitian(defect(f, t));
    return MembershipReport{m, tol, m >= -tol, static_cast<std::size_t>(t.dimension())};
}

namespace {

Complex monomial(const Word& w, const ComplexVector& point)
{
    Complex v(1.0);
    for (int c : w)
        v *= point[c - 1];
    return v;
}

} // namespace

Complex eval_scalar(const FreePoly& p, const ComplexVector& point)
{
    if (point.size() != p.arity())
        throw DimensionError("point size does not match polynomial arity");
    Complex sum(0.0);
    for (const auto& [w, c] : p.coefficients())
        sum += c * monomial(w, point);
    return sum;
}

ComplexVector coherent_vector(const Symbol& f, const ComplexVector& point, int depth, std::size_t cap)
{
    if (point.size() != f.arity())
        throw DimensionError("point size does not match symbol arity");
    WeightTable b = compute_weights(f, depth, cap);
    const FockIndex& index = b.index();
    const ComplexVector conj_point = point.conjugate();
    ComplexVector z(static_cast<Eigen::Index>(index.dimension()));
    for (std::size_t i = 0; i < index.dimension(); ++i)
        z[static_cast<Eigen::Index>(i)] = monomial(index.word(i), conj_point) * std::sqrt(b.at(i).get_d());
    return z;
}

CharacterCheck char_eval_check(const Symbol& f, const ComplexVector& point, const FreePoly& p, int depth,
                               std::size_t cap)
{
    if (depth < p.degree())
        throw PreconditionError("truncation level " + std::to_string(depth) + " is below the polynomial degree " +
                                std::to_string(p.degree()));
    if (p.arity() != f.arity())
        throw DimensionError("polynomial arity does not match symbol arity");
    const int level = std::max(depth, 1);
    ShiftFamily family = build_shifts(f, level, cap);
    const ComplexVector z = coherent_vector(f, point, level, cap);

    const auto d = static_cast<Eigen::Index>(family.index().dimension());
    ComplexVector image = ComplexVector::Zero(d);
    for (const auto& [w, c] : p.coefficients()) {
        ComplexVector v = ComplexVector::Zero(d);
        v[0] = 1.0;
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            v = family.shift(*it).apply(v);
        image += c * v;
    }

    CharacterCheck out;
    out.operator_value = z.dot(image);
    out.scalar_value = eval_scalar(p, point);
    out.difference = std::abs(out.operator_value - out.scalar_value);
    return out;
}

} // namespace ncd
