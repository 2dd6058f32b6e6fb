#include "doctest.h"

#include "ncdomain/errors.hpp"
#include "ncdomain/fock.hpp"
#include "ncdomain/jacobi.hpp"
#include "support.hpp"

#include <Eigen/SVD>

#include <cmath>

using namespace ncd;

namespace {

// Compositions of k into parts 1 and 2, by enumerating cut patterns.
long count_one_two_compositions(int k)
{
    if (k == 0)
        return 1;
    long count = 0;
    for (unsigned cuts = 0; cuts < (1u << (k - 1)); ++cuts) {
        int run = 1;
        bool ok = true;
        for (int i = 0; i < k - 1 && ok; ++i) {
            if ((cuts >> i) & 1u) {
                ok = run <= 2;
                run = 1;
            } else {
                ++run;
            }
        }
        count += ok && run <= 2;
    }
    return count;
}

double max_offdiag(const ComplexMatrix& m)
{
    double worst = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (r != c)
                worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

double spectral_norm(const ComplexMatrix& m)
{
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

} // namespace

TEST_SUITE("fock") {

TEST_CASE("enumerate_words examples")
{
    const FockIndex i0 = enumerate_words(2, 0);
    CHECK(i0.dimension() == 1);
    CHECK(i0.word(0).empty());

    const FockIndex i2 = enumerate_words(2, 2);
    REQUIRE(i2.dimension() == 7);
    const std::vector<Word> expected{Word{}, Word{1}, Word{2}, Word{1, 1}, Word{1, 2}, Word{2, 1}, Word{2, 2}};
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(i2.word(k) == expected[k]);

    CHECK(enumerate_words(3, 3).dimension() == 40);
}

TEST_CASE("Fock index is a graded-lex bijection")
{
    for (int n = 1; n <= 4; ++n) {
        const FockIndex idx(n, 4);
        for (std::size_t i = 0; i < idx.dimension(); ++i) {
            CHECK(idx.index(idx.word(i)) == i);
            CHECK(idx.level(i) == static_cast<int>(idx.word(i).size()));
            if (i > 0)
                CHECK(idx.word(i - 1) < idx.word(i));
            if (idx.level(i) < idx.depth())
                for (int j = 1; j <= n; ++j)
                    CHECK(idx.word(idx.prepend(j, i)) == idx.word(i).prepend(j));
        }
        CHECK_FALSE(idx.find(Word{1, 1, 1, 1, 1}).has_value());
        CHECK_FALSE(idx.find(Word{n + 1}).has_value());
    }
}

TEST_CASE("dimension cap")
{
    CHECK(fock_dimension(10, 5) == 111111);
    CHECK_FALSE(fock_dimension(10, 6).has_value());
    CHECK_THROWS_AS(enumerate_words(10, 6), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_words(2, 4, 30), ResourceLimitError);
    CHECK(enumerate_words(2, 4, 31).dimension() == 31);
    CHECK_THROWS_AS(compute_weights(parse_symbol("X1+X2"), 20), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_words(0, 2), PreconditionError);
    CHECK_THROWS_AS(enumerate_words(2, -1), PreconditionError);
}

TEST_CASE("compute_weights examples")
{
    const WeightTable free = compute_weights(parse_symbol("X1+X2"), 5);
    for (const auto& b : free.values())
        CHECK(b == 1);

    const WeightTable fib = compute_weights(parse_symbol("X1+X1X1"), 5);
    const std::vector<long> expected{1, 1, 2, 3, 5, 8};
    for (int k = 0; k <= 5; ++k) {
        CHECK(fib.at(static_cast<std::size_t>(k)) == expected[static_cast<std::size_t>(k)]);
        CHECK(count_one_two_compositions(k) == expected[static_cast<std::size_t>(k)]);
    }

    const WeightTable pow2 = compute_weights(parse_symbol("2X1"), 6);
    for (int k = 0; k <= 6; ++k)
        CHECK(pow2.at(static_cast<std::size_t>(k)) == Rational(1 << k));
}

TEST_CASE("brute_force_weight examples")
{
    const Symbol fib = parse_symbol("X1+X1X1");
    CHECK(brute_force_weight(fib, Word{1, 1, 1, 1}) == 5);
    CHECK(brute_force_weight(fib, Word{}) == 1);
    CHECK(brute_force_weight(parse_symbol("X1+X2+X1X2"), Word{1, 2}) == 2);
    CHECK(brute_force_weight(parse_symbol("X1+X2+X1X2"), Word{2, 1}) == 1);
}

TEST_CASE("prefix recursion agrees with the factorization sum")
{
    testing::Rng rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        const int depth = f.arity() <= 2 ? 8 : 6;
        const WeightTable b = compute_weights(f, depth);
        for (std::size_t i = 0; i < b.index().dimension(); ++i)
            REQUIRE(b.at(i) == brute_force_weight(f, b.index().word(i)));

        if (f.arity() == 3) {
            // Spot-check length-8 words through a deeper table.
            const WeightTable deep = compute_weights(f, 8);
            for (int k = 0; k < 200; ++k) {
                const Word w = testing::random_word(rng, 3, 8);
                REQUIRE(deep.weight(w) == brute_force_weight(f, w));
            }
        }
    }
}

TEST_CASE("weights satisfy the prefix recursion and are positive")
{
    testing::Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 4);
        const WeightTable b = compute_weights(f, 5);
        CHECK(b.at(0) == 1);
        for (std::size_t i = 1; i < b.index().dimension(); ++i) {
            const Word& w = b.index().word(i);
            Rational sum(0);
            for (std::size_t len = 1; len <= w.size(); ++len)
                sum += f.coefficient(w.prefix(len)) * b.weight(w.suffix_from(len));
            CHECK(b.at(i) == sum);
            CHECK(b.at(i) > 0);
        }
    }
}

TEST_CASE("build_shifts examples")
{
    const ShiftFamily free = build_shifts(parse_symbol("X1+X2"), 2);
    const FockIndex& idx = free.index();
    CHECK(free.shift(1).row(idx.index(Word{})) == static_cast<std::int64_t>(idx.index(Word{1})));
    CHECK(free.shift(1).row(idx.index(Word{2})) == static_cast<std::int64_t>(idx.index(Word{1, 2})));
    for (const auto& w : free.shifts)
        for (std::size_t c = 0; c < idx.level_offset(2); ++c)
            CHECK(w.value(c) == 1.0);

    const ShiftFamily two = build_shifts(parse_symbol("2X1"), 3);
    CHECK(two.shift(1).nonzeros() == 3);
    for (std::size_t c = 0; c < 3; ++c)
        CHECK(two.shift(1).value(c) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    const ShiftFamily fib = build_shifts(parse_symbol("X1+X1X1"), 4);
    CHECK(fib.shift(1).entry(3, 2) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));

    CHECK_THROWS_AS(build_shifts(parse_symbol("X1"), 0), PreconditionError);
}

TEST_CASE("shift structure and adjoint action")
{
    testing::Rng rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        const int depth = 4;
        const ShiftFamily s = build_shifts(f, depth);
        const FockIndex& idx = s.index();
        const auto d = static_cast<Eigen::Index>(idx.dimension());
        const std::size_t top = idx.level_offset(depth);
        for (int j = 1; j <= f.arity(); ++j) {
            const ShiftOperator& w = s.shift(j);
            CHECK(w.nonzeros() == top);
            for (std::size_t col = top; col < idx.dimension(); ++col)
                CHECK(w.row(col) == ShiftOperator::kEmpty);
            for (std::size_t beta = 0; beta < idx.dimension(); ++beta) {
                ComplexVector e = ComplexVector::Zero(d);
                e[static_cast<Eigen::Index>(beta)] = 1.0;
                const ComplexVector adj = w.apply_adjoint(e);
                const Word& word = idx.word(beta);
                if (word.empty() || word[0] != j) {
                    CHECK(adj.norm() == 0.0);
                    continue;
                }
                const std::size_t alpha = idx.index(word.suffix_from(1));
                const double expected = std::sqrt(Rational(s.weights.at(alpha) / s.weights.at(beta)).get_d());
                CHECK(std::abs(adj[static_cast<Eigen::Index>(alpha)] - expected) < 1e-15);
                CHECK(std::abs(adj.norm() - expected) < 1e-15);
            }
            // Sparse and column-wise views agree.
            const ComplexVector x = testing::random_complex_vector(rng, d);
            CHECK((w.to_sparse() * x - w.apply(x)).norm() < 1e-13);
        }
    }
}

TEST_CASE("eval_poly examples")
{
    ComplexMatrix a(2, 2), b(2, 2);
    a << 0, 1, 0, 0;
    b << 0, 0, 1, 0;
    const OperatorTuple t = OperatorTuple::from_dense({a, b});
    CHECK(eval_poly(FreePoly(2, {{Word{1}, 1.0}}), t) == a);
    CHECK(eval_poly(FreePoly(2, {{Word{}, 1.0}}), t) == ComplexMatrix::Identity(2, 2));
    ComplexMatrix expected(2, 2);
    expected << 1, 0, 0, 0;
    CHECK(eval_poly(FreePoly(2, {{Word{1, 2}, 1.0}}), t) == expected);

    CHECK_THROWS_AS(eval_poly(FreePoly(3, {{Word{3}, 1.0}}), t), DimensionError);
    CHECK_THROWS_AS(OperatorTuple::from_dense({a, ComplexMatrix::Zero(3, 3)}), DimensionError);
}

TEST_CASE("defect examples")
{
    const Symbol free = parse_symbol("X1+X2");
    const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    CHECK(defect(free, OperatorTuple::from_dense({zero, zero})) == ComplexMatrix::Identity(2, 2));

    ComplexVector p(1);
    p << 1.0 / std::sqrt(2.0);
    CHECK(std::abs(defect(parse_symbol("2X1"), OperatorTuple::from_point(p))(0, 0)) < 1e-15);

    // Every row of level 1..N vanishes; only the vacuum row survives.
    const ComplexMatrix d = defect(free, OperatorTuple::from_shifts(build_shifts(free, 2)));
    ComplexMatrix expected = ComplexMatrix::Zero(7, 7);
    expected(0, 0) = 1.0;
    CHECK((d - expected).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(defect(free, OperatorTuple::from_point(p)), DimensionError);
}

TEST_CASE("defect is Hermitian for random tuples")
{
    testing::Rng rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        std::vector<ComplexMatrix> ops;
        for (int j = 0; j < f.arity(); ++j)
            ops.push_back(testing::random_matrix(rng, 4));
        const ComplexMatrix d = defect(f, OperatorTuple::from_dense(ops));
        CHECK(d == d.adjoint());
    }
}

TEST_CASE("defect of the truncated universal shifts is diagonal")
{
    testing::Rng rng(113);
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        const int depth = f.degree() + 2;
        const ComplexMatrix d = defect(f, OperatorTuple::from_shifts(build_shifts(f, depth)));
        CHECK(max_offdiag(d) <= 1e-12);
        CHECK(std::abs(d(0, 0) - 1.0) <= 1e-12);
        for (Eigen::Index i = 1; i < d.rows(); ++i)
            CHECK(std::abs(d(i, i)) <= 1e-12);
    }
}

TEST_CASE("is_member examples")
{
    ComplexVector p(2);
    p << 0.6, 0.8;
    const MembershipReport on_sphere = is_member(parse_symbol("X1+X2"), OperatorTuple::from_point(p));
    CHECK(on_sphere.member);
    CHECK(on_sphere.min_eig == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(on_sphere.dimension == 1);
    CHECK(on_sphere.tolerance == 1e-9);

    const MembershipReport outside = is_member(parse_symbol("X1+X2+X1X2"), OperatorTuple::from_point(p));
    CHECK_FALSE(outside.member);
    CHECK(outside.min_eig == doctest::Approx(-0.2304).epsilon(1e-14));

    testing::Rng rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        const MembershipReport r = is_member(f, OperatorTuple::from_shifts(build_shifts(f, f.degree() + 3)));
        CHECK(r.member);
        CHECK(r.min_eig >= -1e-12);
    }

    CHECK_THROWS_AS(is_member(parse_symbol("X1+X2"), OperatorTuple::from_point(p), 0.0), PreconditionError);
}

TEST_CASE("coherent_vector examples")
{
    const Symbol free = parse_symbol("X1+X2");
    const ComplexVector z0 = coherent_vector(free, ComplexVector::Zero(2), 2);
    CHECK(z0[0] == 1.0);
    CHECK(z0.norm() == 1.0);

    ComplexVector lam(2);
    lam << 0.5, 0.0;
    const ComplexVector z = coherent_vector(free, lam, 2);
    const std::vector<double> expected{1, 0.5, 0, 0.25, 0, 0, 0};
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(std::abs(z[static_cast<Eigen::Index>(k)] - expected[k]) < 1e-15);

    ComplexVector mu(1);
    mu << 0.3;
    const ComplexVector zf = coherent_vector(parse_symbol("X1+X1X1"), mu, 3);
    CHECK(std::abs(zf[1] - 0.3) < 1e-15);
    CHECK(std::abs(zf[2] - 0.09 * std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(zf[3] - 0.027 * std::sqrt(3.0)) < 1e-15);

    // Coordinates use the conjugate point.
    ComplexVector im(2);
    im << Complex(0, 0.5), 0.0;
    CHECK(std::abs(coherent_vector(free, im, 1)[1] - Complex(0, -0.5)) < 1e-15);
}

TEST_CASE("coherent vectors are joint eigenvectors of the adjoint shifts")
{
    testing::Rng rng(131);
    for (int trial = 0; trial < 15; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        const int depth = f.degree() + 3;
        const ComplexVector lam = testing::random_interior_point(rng, f);
        const ShiftFamily s = build_shifts(f, depth);
        const ComplexVector z = coherent_vector(f, lam, depth);
        const auto keep = static_cast<Eigen::Index>(s.index().level_offset(depth - f.degree() + 1));
        for (int j = 1; j <= f.arity(); ++j) {
            const ComplexVector gap = s.shift(j).apply_adjoint(z) - std::conj(lam[j - 1]) * z;
            CHECK(gap.head(keep).norm() <= 1e-10);
        }
    }
}

TEST_CASE("char_eval_check examples")
{
    ComplexVector lam(2);
    lam << 0.3, Complex(0, 0.4);
    const CharacterCheck c1 = char_eval_check(parse_symbol("X1+X2"), lam, FreePoly(2, {{Word{1}, 1.0}}), 1);
    CHECK(std::abs(c1.operator_value - 0.3) < 1e-15);
    CHECK(std::abs(c1.scalar_value - 0.3) < 1e-15);
    CHECK(c1.difference < 1e-15);

    const CharacterCheck c2 = char_eval_check(parse_symbol("X1+X2"), lam, FreePoly(2, {{Word{}, 1.0}}), 0);
    CHECK(std::abs(c2.operator_value - 1.0) < 1e-15);
    CHECK(std::abs(c2.scalar_value - 1.0) < 1e-15);

    ComplexVector real(2);
    real << 0.2, 0.3;
    const CharacterCheck c3 =
        char_eval_check(parse_symbol("X1+X2+X1X2"), real, FreePoly(2, {{Word{1, 2}, 1.0}}), 2);
    CHECK(std::abs(c3.operator_value - 0.06) < 1e-15);
    CHECK(std::abs(c3.scalar_value - 0.06) < 1e-15);

    CHECK_THROWS_AS(char_eval_check(parse_symbol("X1+X2"), real, FreePoly(2, {{Word{1, 2}, 1.0}}), 1),
                    PreconditionError);
}

TEST_CASE("gauge rotation leaves the defect spectrum unchanged")
{
    testing::Rng rng(137);
    for (int trial = 0; trial < 5; ++trial) {
        const Symbol f = testing::random_symbol(rng, 3, 1, 3);
        const ShiftFamily s = build_shifts(f, f.degree() + 2);
        const double base = is_member(f, OperatorTuple::from_shifts(s)).min_eig;
        const Complex mu = testing::random_unimodular(rng);
        std::vector<SparseComplexMatrix> rotated;
        for (const auto& w : s.shifts)
            rotated.push_back(std::conj(mu) * w.to_sparse());
        CHECK(std::abs(is_member(f, OperatorTuple(rotated)).min_eig - base) <= 1e-12);
    }
}

TEST_CASE("contractivity spot-check against truncated shifts")
{
    // Reported, not asserted: the truncated norm only approximates the full one.
    testing::Rng rng(139);
    int violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    const int samples = 12;
    for (int trial = 0; trial < samples; ++trial) {
        const Symbol f = testing::random_symbol(rng, 2, 1, 2);
        const int d = testing::uniform_int(rng, 1, 4);
        std::vector<ComplexMatrix> ops;
        for (int j = 0; j < f.arity(); ++j)
            ops.push_back(testing::random_matrix(rng, d));
        // Shrink into the domain: t <= 1 scales every term by at most t^2.
        ComplexMatrix load = ComplexMatrix::Identity(d, d) - defect(f, OperatorTuple::from_dense(ops));
        const double top = -min_eig_hermitian(-load);
        const double t = std::min(1.0, 1.0 / std::sqrt(top)) * 0.999;
        for (auto& m : ops)
            m *= t;
        const OperatorTuple tuple = OperatorTuple::from_dense(ops);
        REQUIRE(is_member(f, tuple).member);

        const FreePoly p = testing::random_free_poly(rng, f.arity(), testing::uniform_int(rng, 1, 3));
        const OperatorTuple w = OperatorTuple::from_shifts(build_shifts(f, p.degree() + 4));
        const double margin = spectral_norm(eval_poly(p, w)) - spectral_norm(eval_poly(p, tuple));
        CHECK(std::isfinite(margin));
        worst = std::min(worst, margin);
        violations += margin < 0.0;
    }
    MESSAGE("contractivity: " << violations << "/" << samples << " negative margins, worst margin " << worst);
}

} // TEST_SUITE
