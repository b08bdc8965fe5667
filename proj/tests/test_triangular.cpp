#include <gtest/gtest.h>

#include "gendawson/bspec.hpp"
#include "gendawson/triangular.hpp"
#include "oracles.hpp"

using namespace gendawson;
using oracle::Gen;

namespace {

UniTriangular<Rational> order3(const Rational& a, const Rational& b, const Rational& c) {
    // c21 = a, c31 = b, c32 = c
    return UniTriangular<Rational>::from_dense({{1, 0, 0}, {a, 1, 0}, {b, c, 1}});
}

std::vector<Rational> prefix(const DerivativeSeq<Rational>& d, std::size_t from, std::size_t to) {
    return {d.values().begin() + from, d.values().begin() + to};
}

}  // namespace

TEST(UniTriangularType, Accessors) {
    const auto m = order3(2, 3, 5);
    EXPECT_EQ(m.at(1, 1), 1);
    EXPECT_EQ(m.at(1, 3), 0);
    EXPECT_EQ(m.at(3, 2), 5);
    EXPECT_EQ(dense_determinant(m.dense()), 1);
    EXPECT_THROW(m.at(0, 1), DomainError);
    EXPECT_THROW(m.at(1, 4), DomainError);
}

TEST(UniTriangularType, FromDenseValidates) {
    EXPECT_THROW(UniTriangular<Rational>::from_dense({{1, 1}, {0, 1}}), DomainError);
    EXPECT_THROW(UniTriangular<Rational>::from_dense({{2, 0}, {0, 1}}), DomainError);
    EXPECT_THROW(UniTriangular<Rational>::from_dense({{1, 0}, {0}}), DomainError);
}

TEST(UniTriangularType, TextDumpRoundTrip) {
    Gen g(8);
    for (int k = 1; k <= 6; ++k) {
        const auto m = g.rational_unitriangular(k);
        EXPECT_EQ(unitriangular_from_text(to_text(m)), m);
    }
    EXPECT_EQ(to_text(order3(Rational(1, 2), -3, 0)), "3\n1 0 0\n1/2 1 0\n-3 0 1\n");
    EXPECT_THROW(unitriangular_from_text("2\n1 5\n0 1\n"), ParseError);
    EXPECT_THROW(unitriangular_from_text("2\n1 0\n0\n"), ParseError);
    EXPECT_THROW(unitriangular_from_text("2\n1 0\n0 1 7\n"), ParseError);
}

TEST(BuildSystem, ClassicalDawsonK3) {
    const auto sys = build_system(BSpec::polynomial({0, 2}).derivatives(3), 3);
    EXPECT_EQ(sys.matrix.at(2, 1), 0);
    EXPECT_EQ(sys.matrix.at(3, 1), 6);
    EXPECT_EQ(sys.matrix.at(3, 2), 0);
    EXPECT_EQ(sys.constants, (std::vector<Rational>{0, -4, 0}));
}

TEST(BuildSystem, SmallestAndZero) {
    const auto one = build_system(DerivativeSeq<Rational>({Rational(5, 3)}), 1);
    EXPECT_EQ(one.matrix.order(), 1);
    EXPECT_EQ(one.constants, std::vector<Rational>{Rational(-5, 3)});

    const auto zero = build_system(BSpec::polynomial({0}).derivatives(6), 6);
    EXPECT_EQ(zero.matrix, UniTriangular<Rational>(6));
    for (const auto& c : zero.constants) EXPECT_EQ(c, 0);
}

TEST(BuildSystem, InputLength) {
    EXPECT_THROW(build_system(DerivativeSeq<Rational>({1, 2}), 3), InputLengthError);
}

TEST(ForwardSolve, Examples) {
    const std::vector<Rational> r{3, -1, Rational(2, 5)};
    EXPECT_EQ(forward_solve(UniTriangular<Rational>(3), std::span<const Rational>(r)), r);

    const auto a = UniTriangular<Rational>::from_dense({{1, 0}, {5, 1}});
    const std::vector<Rational> rhs{1, 0};
    EXPECT_EQ(forward_solve(a, std::span<const Rational>(rhs)), (std::vector<Rational>{1, -5}));

    const auto sys = build_system(BSpec::polynomial({0, 2}).derivatives(4), 4);
    EXPECT_EQ(forward_solve(sys.matrix, std::span<const Rational>(sys.constants)),
              (std::vector<Rational>{0, -4, 0, 32}));
}

TEST(ForwardSolve, MatchesRecursion) {
    Gen g(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = DerivativeSeq<Rational>(g.rationals(12));
        for (int k = 1; k <= 12; ++k) {
            const auto sys = build_system(b, k);
            const auto x = forward_solve(sys.matrix, std::span<const Rational>(sys.constants));
            EXPECT_EQ(x, prefix(dawson_derivatives(b, k + 1), 2, k + 2)) << "k=" << k;
        }
    }
}

TEST(Cofactor, ClosedFormExamples) {
    const auto m = order3(Rational(2, 3), -4, 7);
    EXPECT_EQ(cofactor_closed_form(m, 1, 1), Rational(-2, 3));
    EXPECT_EQ(cofactor_closed_form(m, 2, 1), -7);
    EXPECT_EQ(cofactor_closed_form(m, 1, 2), Rational(2, 3) * 7 - (-4));
    EXPECT_EQ(cofactor_oracle(m, 1, 3), Rational(2, 3) * 7 - (-4));

    const UniTriangular<Rational> ident(7);
    for (int i = 1; i <= 6; ++i)
        for (int n = 1; n <= 7 - i; ++n) EXPECT_EQ(cofactor_closed_form(ident, i, n), 0);
}

TEST(Cofactor, RangeChecks) {
    const UniTriangular<Rational> m(4);
    EXPECT_THROW(cofactor_closed_form(m, 0, 1), DomainError);
    EXPECT_THROW(cofactor_closed_form(m, 4, 1), DomainError);
    EXPECT_THROW(cofactor_closed_form(m, 2, 3), DomainError);
    EXPECT_THROW(cofactor_closed_form(m, 1, 0), DomainError);
    EXPECT_THROW(cofactor_oracle(m, 5, 1), DomainError);
    EXPECT_THROW(cofactor_oracle(m, 1, 0), DomainError);
}

TEST(Cofactor, OracleDiagonalAndBelow) {
    Gen g(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = g.integer(2, 7);
        const auto m = g.integer_unitriangular(k);
        for (int r = 1; r <= k; ++r) {
            EXPECT_EQ(cofactor_oracle(m, r, r), 1);
            for (int s = 1; s < r; ++s) EXPECT_EQ(cofactor_oracle(m, r, s), 0);
        }
    }
}

TEST(Cofactor, ClosedFormEqualsOracleOnRandomMatrices) {
    Gen g(123);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = g.integer(2, 9);
        const auto m = trial % 2 ? g.integer_unitriangular(k) : g.rational_unitriangular(k);
        for (int i = 1; i < k; ++i)
            for (int n = 1; n <= k - i; ++n)
                ASSERT_EQ(cofactor_closed_form(m, i, n), cofactor_oracle(m, i, i + n))
                    << "trial " << trial << " i=" << i << " n=" << n << "\n" << to_text(m);
    }
}

TEST(Cofactor, LaplaceAlienIdentity) {
    Gen g(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = g.integer(3, 8);
        const auto m = g.integer_unitriangular(k);
        for (int i = 1; i <= k; ++i)
            for (int n = 0; i + n + 1 <= k; ++n) {
                Rational sum = 0;
                for (int j = 1; j <= k; ++j) sum += m.at(i + n + 1, j) * cofactor(m, i, j);
                EXPECT_EQ(sum, 0) << "i=" << i << " n=" << n;
            }
    }
}

TEST(Cofactor, ChainCountsAreBinomial) {
    for (int n = 1; n <= 12; ++n) {
        std::vector<long> per_s(n + 1, 0);
        enumerate_chains(n, [&](std::span<const int> chain) {
            ++per_s[chain.size() - 1];
            for (std::size_t q = 1; q < chain.size(); ++q) ASSERT_LT(chain[q], chain[q - 1]);
            ASSERT_EQ(chain.front(), n);
            ASSERT_EQ(chain.back(), 0);
        });
        for (int s = 1; s <= n; ++s)
            EXPECT_EQ(per_s[s], oracle::binomial(n - 1, n - s).convert_to<long>()) << "n=" << n << " s=" << s;
    }
}

TEST(DenseDeterminant, MatchesPermutationExpansion) {
    Gen g(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = g.integer(1, 6);
        DenseMatrix<Rational> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& v : row) v = trial % 3 == 0 ? Rational(g.integer(-1, 1)) : g.rational();
        EXPECT_EQ(dense_determinant(m), oracle::permutation_determinant(m));
    }
    EXPECT_EQ(dense_determinant<Rational>({}), 1);
}

TEST(BorderedDet, Examples) {
    const UniTriangular<Rational> core = order3(1, 2, 3);
    const BorderedSystem<Rational> zero_alpha(core, {0, 0, 0}, {4, 5, 6}, Rational(-7, 2));
    EXPECT_EQ(bordered_det(zero_alpha), Rational(-7, 2));

    // P_2 for b = 2x
    const auto p2 = cramer_matrix(BSpec::polynomial({0, 2}).derivatives(2), 2);
    EXPECT_EQ(p2.core.order(), 1);
    EXPECT_EQ(p2.alpha, std::vector<Rational>{0});
    EXPECT_EQ(p2.beta, std::vector<Rational>{0});
    EXPECT_EQ(p2.corner, -4);
    EXPECT_EQ(bordered_det(p2), -4);

    const BorderedSystem<Rational> empty(UniTriangular<Rational>(0), {}, {}, 9);
    EXPECT_EQ(bordered_det(empty), 9);
    EXPECT_THROW(BorderedSystem<Rational>(core, {1}, {1, 2, 3}, 0), DomainError);
}

TEST(BorderedDet, MatchesDenseDeterminant) {
    Gen g(55);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = g.integer(0, 5);
        const BorderedSystem<Rational> sys(g.rational_unitriangular(n), g.rationals(n), g.rationals(n), g.rational());
        EXPECT_EQ(bordered_det(sys), dense_determinant(sys.assembled()));
    }
}

TEST(Cramer, Examples) {
    EXPECT_EQ(dawson_derivative_cramer(BSpec::polynomial({0, 2}).derivatives(2), 2), -4);
    for (int k = 1; k <= 6; ++k)
        EXPECT_EQ(dawson_derivative_cramer(BSpec::polynomial({0}).derivatives(k), k), 0);
    const Rational c(-2, 9);
    EXPECT_EQ(dawson_derivative_cramer(BSpec::polynomial({c}).derivatives(2), 2), c * c);
    EXPECT_EQ(dawson_derivative_cramer(DerivativeSeq<Rational>({c}), 1), -c);
}

TEST(Cramer, EqualsRecursionAndDenseDeterminant) {
    Gen g(99);
    for (int trial = 0; trial < 15; ++trial) {
        const auto b = DerivativeSeq<Rational>(g.rationals(10));
        const auto d = dawson_derivatives(b, 11);
        for (int k = 1; k <= 10; ++k) {
            const auto p = cramer_matrix(b, k);
            EXPECT_EQ(bordered_det(p), d[k + 1]) << "k=" << k;
            EXPECT_EQ(dense_determinant(p.assembled()), d[k + 1]) << "k=" << k;
        }
    }
}

TEST(Cramer, ExpandedSignedFormAgrees) {
    // -k b^{(k-1)} + sum_{i,j<k} i C(k,j+1) b^{(k-j-1)} b^{(i-1)} Delta_{i,j}
    Gen g(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto b = DerivativeSeq<Rational>(g.rationals(9));
        for (int k = 1; k <= 9; ++k) {
            const auto core = build_system(b, k).matrix;
            const UniTriangular<Rational> a_prev(k - 1, [&](int r, int s) -> Rational { return core.at(r, s); });
            Rational v = -Rational(k) * b[k - 1];
            for (int i = 1; i < k; ++i)
                for (int j = 1; j < k; ++j)
                    v += Rational(i) * Rational(oracle::binomial(k, j + 1)) * b[k - j - 1] * b[i - 1] *
                         cofactor_oracle(a_prev, i, j);
            EXPECT_EQ(v, dawson_derivative_cramer(b, k)) << "k=" << k;
        }
    }
}

TEST(Triangular, FloatingModeWorks) {
    const auto m = UniTriangular<double>::from_dense({{1, 0, 0}, {0.5, 1, 0}, {2, -1, 1}});
    EXPECT_DOUBLE_EQ(cofactor_closed_form(m, 1, 2), 0.5 * -1 - 2);
    EXPECT_DOUBLE_EQ(cofactor_oracle(m, 1, 3), 0.5 * -1 - 2);
    const DerivativeSeq<double> b({0.0, 2.0, 0.0, 0.0});
    EXPECT_DOUBLE_EQ(dawson_derivative_cramer(b, 4), 32.0);
}
