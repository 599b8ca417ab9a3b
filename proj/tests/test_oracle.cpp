#include "support.hpp"

#include <gtest/gtest.h>

using namespace skew;
using namespace skewtest;

TEST(SliceZeroTest, Examples)
{
    auto g = grassmannian(3, 7);
    const auto& pres = g.ring->presentation();
    EXPECT_TRUE(slice_zero_test(pres, P(g, "w1^8")));
    EXPECT_FALSE(slice_zero_test(pres, P(g, "w1^7")));
    for (const auto& r : pres.relations)
        EXPECT_TRUE(slice_zero_test(pres, r));

    auto g6 = grassmannian(2, 6);
    EXPECT_FALSE(slice_zero_test(g6.ring->presentation(), P(g6, "w1^2 w2^2")));
    EXPECT_TRUE(slice_zero_test(g6.ring->presentation(), Poly(g6.ring->table())));
}

TEST(SliceZeroTest, RejectsInvalidInput)
{
    auto g = grassmannian(2, 5);
    EXPECT_THROW((void)slice_zero_test(g.ring->presentation(), P(g, "w1 + w2")), ContractError);
    EXPECT_THROW((void)slice_zero_test(g.ring->presentation(), P(g, "w2^4")), ContractError);
}

TEST(SliceIdealTest, Examples)
{
    auto g = grassmannian(3, 7);
    const auto& pres = g.ring->presentation();
    const std::vector<Poly> w1{P(g, "w1")};
    EXPECT_FALSE(slice_ideal_test(pres, P(g, "w1^2 w2^3 + w2 w3^2"), w1));
    EXPECT_TRUE(slice_ideal_test(pres, P(g, "w1^5 w2^2"), w1));
    EXPECT_TRUE(slice_ideal_test(pres, P(g, "w1^2 w2^2 w3 + w3^3"), w1));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const int d = static_cast<int>(rng() % 11);
        Poly q = random_homogeneous(g.ring->table(), d, rng);
        EXPECT_TRUE(slice_ideal_test(pres, w1.front() * q, w1));
    }
}

TEST(SliceIdealTest, AgreesWithExtendedRingOnLargeOrientedCase)
{
    auto g = grassmannian(3, 13);
    const auto& pres = g.ring->presentation();
    const std::vector<Poly> w1{P(g, "w1")};
    QuotientRing ext = g.ring->extended(w1);
    for (int d = 0; d <= 15; ++d) {
        auto slice = build_slice(pres, d, w1);
        for (int b = 0; 2 * b <= d; ++b) {
            if ((d - 2 * b) % 3)
                continue;
            Poly p = Poly::monomial(g.ring->table(), g.ring->table()->monomial({0, b, (d - 2 * b) / 3}));
            EXPECT_EQ(slice.in_ideal(p), ideal_membership(*g.ring, p, w1)) << to_string(p);
            EXPECT_EQ(slice.in_ideal(p), ext.is_zero(p));
        }
    }
}

TEST(SliceRank, MatchesBasisCountsOnCatalog)
{
    for (const auto& m : catalog_atoms(14)) {
        const auto& pres = m.ring->presentation();
        for (int d = 0; d <= std::min(m.dimension, 14); ++d) {
            auto slice = build_slice(pres, d);
            EXPECT_EQ(slice.quotient_dimension(), m.ring->degree_basis(d).size()) << m.label << " degree " << d;
            EXPECT_EQ(slice.monomial_count(), monomials_of_degree(*pres.table, d).size());
        }
    }
}

TEST(SliceZeroTest, AgreesWithNormalFormOnRandomElements)
{
    std::mt19937_64 rng(8080);
    for (const auto& m : catalog_atoms(14)) {
        const auto& pres = m.ring->presentation();
        int zero = 0;
        for (int i = 0; i < 200; ++i) {
            const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(m.dimension + 1));
            Poly p = (i % 2) ? random_mixed_element(pres, d, rng) : random_homogeneous(pres.table, d, rng);
            const bool z = slice_zero_test(pres, p);
            zero += z;
            ASSERT_EQ(z, m.ring->is_zero(p)) << m.label << ": " << to_string(p);
        }
        EXPECT_GT(zero, 0) << m.label;
    }
}

TEST(ExpandVerify, Examples)
{
    auto source = [](int k) {
        TablePtr xs = variable_table(k);
        std::vector<Poly> factors;
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j)
                factors.push_back(Poly::one(xs) + Poly::generator(xs, i) + Poly::generator(xs, j));
        return SymmetricPoly(naive_product(factors));
    };
    EXPECT_TRUE(expand_verify(build_pk(2), source(2)));
    EXPECT_TRUE(expand_verify(build_pk(3), source(3)));
    auto p3 = build_pk(3);
    ElementaryExpansion flipped{p3.poly + parse_poly(p3.poly.table(), "w1^2 w2^2")};
    EXPECT_FALSE(expand_verify(flipped, source(3)));
    EXPECT_FALSE(expand_verify(build_pk(2), source(3)));
}

TEST(Gf2Span, RankAndMembership)
{
    Gf2Span span(5);
    BitVector a(5), b(5), c(5);
    a.flip(0);
    a.flip(2);
    b.flip(2);
    b.flip(4);
    c.flip(0);
    c.flip(4);
    EXPECT_TRUE(span.insert(a));
    EXPECT_TRUE(span.insert(b));
    EXPECT_FALSE(span.insert(c));
    EXPECT_EQ(span.rank(), 2u);
    EXPECT_TRUE(span.contains(c));
    BitVector d(5);
    d.flip(1);
    EXPECT_FALSE(span.contains(d));
    EXPECT_TRUE(span.contains(BitVector(5)));
}

TEST(Gf2Span, RankOfRandomMatricesMatchesIndependentElimination)
{
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t bits = 1 + rng() % 130;
        const std::size_t rows = rng() % 140;
        Gf2Span span(bits);
        std::vector<std::vector<int>> dense;
        for (std::size_t r = 0; r < rows; ++r) {
            BitVector v(bits);
            std::vector<int> row(bits, 0);
            for (std::size_t i = 0; i < bits; ++i)
                if (rng() % 4 == 0) {
                    v.flip(i);
                    row[i] = 1;
                }
            span.insert(v);
            dense.push_back(row);
        }
        // Plain row reduction on int matrices.
        std::size_t rank = 0;
        for (std::size_t col = 0; col < bits && rank < dense.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < dense.size() && !dense[pivot][col])
                ++pivot;
            if (pivot == dense.size())
                continue;
            std::swap(dense[rank], dense[pivot]);
            for (std::size_t r = 0; r < dense.size(); ++r)
                if (r != rank && dense[r][col])
                    for (std::size_t i = 0; i < bits; ++i)
                        dense[r][i] ^= dense[rank][i];
            ++rank;
        }
        EXPECT_EQ(span.rank(), rank);
    }
}
