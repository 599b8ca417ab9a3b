#include "support.hpp"

#include <gtest/gtest.h>

using namespace skew;
using namespace skewtest;

namespace {

Poly tensor_square_product(int k)
{
    TablePtr xs = variable_table(k);
    std::vector<Poly> factors;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j)
            factors.push_back(Poly::one(xs) + Poly::generator(xs, i) + Poly::generator(xs, j));
    return naive_product(factors);
}

/// Random symmetric polynomial: a sum of orbit sums of random monomials.
template <class Rng>
Poly random_symmetric(int k, int max_degree, Rng& rng)
{
    TablePtr xs = variable_table(k);
    Poly out(xs);
    const int orbits = 1 + static_cast<int>(rng() % 3);
    for (int o = 0; o < orbits; ++o) {
        std::vector<int> e(static_cast<std::size_t>(k));
        for (auto& v : e)
            v = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree / k + 1));
        std::sort(e.begin(), e.end());
        std::vector<Monomial> orbit;
        do
            orbit.push_back(xs->monomial(std::span<const int>(e.data(), e.size())));
        while (std::next_permutation(e.begin(), e.end()));
        out += Poly(xs, orbit);
    }
    return out;
}

} // namespace

TEST(ExpandElementary, Examples)
{
    TablePtr x2 = variable_table(2);
    auto e = expand_elementary(SymmetricPoly(parse_poly(x2, "x1 + x2")));
    EXPECT_EQ(to_string(e.poly), "s1");

    auto p2 = expand_elementary(SymmetricPoly(tensor_square_product(2)));
    EXPECT_EQ(p2.poly, parse_poly(p2.poly.table(), "1 + s1^2"));

    auto p3 = expand_elementary(SymmetricPoly(tensor_square_product(3)));
    EXPECT_EQ(p3.poly, parse_poly(p3.poly.table(), "1 + s1^4 + s2^2 + s1^2 s2^2 + s3^2"));
}

TEST(ExpandElementary, RejectsNonSymmetricInput)
{
    TablePtr x3 = variable_table(3);
    EXPECT_THROW(SymmetricPoly(parse_poly(x3, "x1 + x2")), ContractError);
    EXPECT_THROW(SymmetricPoly(Poly::one(elementary_table(2))), ContractError);
}

TEST(ExpandElementary, RoundTripOnRandomSymmetricPolynomials)
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 80; ++i) {
        const int k = 1 + static_cast<int>(rng() % 4);
        SymmetricPoly s(random_symmetric(k, 12, rng));
        auto e = expand_elementary(s);
        EXPECT_TRUE(expand_verify(e, s)) << to_string(s.poly());
    }
}

TEST(ExpandElementary, IsLinear)
{
    std::mt19937_64 rng(55);
    for (int i = 0; i < 40; ++i) {
        const int k = 1 + static_cast<int>(rng() % 4);
        Poly a = random_symmetric(k, 10, rng);
        Poly b = random_symmetric(k, 10, rng);
        auto ea = expand_elementary(SymmetricPoly(a));
        auto eb = expand_elementary(SymmetricPoly(b));
        auto eab = expand_elementary(SymmetricPoly(a + b));
        EXPECT_EQ(eab.poly, ea.poly + eb.poly);
    }
}

TEST(BuildPk, Examples)
{
    EXPECT_TRUE(build_pk(1).poly.is_one());
    auto p2 = build_pk(2);
    EXPECT_EQ(p2.poly, parse_poly(p2.poly.table(), "1 + w1^2"));
    auto p3 = build_pk(3);
    EXPECT_EQ(p3.poly, parse_poly(p3.poly.table(), "1 + w1^4 + w2^2 + w1^2 w2^2 + w3^2"));
    EXPECT_THROW((void)build_pk(0), UnsupportedError);
    EXPECT_THROW((void)build_pk(5), UnsupportedError);
}

TEST(BuildPk, RoundTripAgainstTheDefiningProduct)
{
    for (int k = 1; k <= kMaxSymmetricRank; ++k) {
        SymmetricPoly source(tensor_square_product(k));
        EXPECT_TRUE(expand_verify(build_pk(k), source)) << "k = " << k;
    }
}

TEST(BuildPk, ConstantTermOneAndEvenDegrees)
{
    for (int k = 1; k <= 3; ++k) {
        const Poly& p = build_pk(k).poly;
        EXPECT_TRUE(p.contains(Monomial{}));
        for (const auto& t : p.terms())
            EXPECT_EQ(t.degree % 2, 0);
    }
}

TEST(OrientedPk, Examples)
{
    EXPECT_TRUE(oriented_pk(1).poly.is_one());
    EXPECT_TRUE(oriented_pk(2).poly.is_one());
    auto p3 = oriented_pk(3);
    EXPECT_EQ(p3.poly, parse_poly(p3.poly.table(), "1 + w2^2 + w3^2"));
}

TEST(ExpandVerify, DetectsACorruptedExpansion)
{
    auto p3 = build_pk(3);
    SymmetricPoly source(tensor_square_product(3));
    ElementaryExpansion bad{p3.poly + parse_poly(p3.poly.table(), "w1 w2")};
    EXPECT_FALSE(expand_verify(bad, source));
    ElementaryExpansion dropped{p3.poly + parse_poly(p3.poly.table(), "w3^2")};
    EXPECT_FALSE(expand_verify(dropped, source));
}

TEST(Elementary, SubstitutionOfSingleSigmas)
{
    for (int k = 1; k <= 4; ++k) {
        TablePtr xs = variable_table(k);
        TablePtr sig = elementary_table(k);
        for (int i = 1; i <= k; ++i) {
            Poly e = substitute_elementary(Poly::generator(sig, static_cast<std::size_t>(i - 1)), xs);
            EXPECT_EQ(e.size(), binomial(k, i));
            EXPECT_EQ(e, elementary_polynomial(xs, i));
        }
    }
}
