#pragma once

// Symmetric polynomials in x_1..x_k rewritten in the elementary symmetric
// polynomials, and the tensor-square polynomials p_k.

#include "skewbound/gf2.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skew {

inline constexpr int kMaxSymmetricRank = 4;

/// x1..xk, all of degree 1.
inline TablePtr variable_table(int k)
{
    if (k < 1 || static_cast<std::size_t>(k) > kMaxGenerators)
        throw ContractError("variable count out of range");
    std::vector<GeneratorTable::Entry> e;
    for (int i = 1; i <= k; ++i)
        e.push_back({"x" + std::to_string(i), 1});
    return make_table(std::move(e));
}

/// prefix1..prefixk with degree(prefix i) = i.
inline TablePtr elementary_table(int k, const std::string& prefix = "s")
{
    if (k < 1 || static_cast<std::size_t>(k) > kMaxGenerators)
        throw ContractError("variable count out of range");
    std::vector<GeneratorTable::Entry> e;
    for (int i = 1; i <= k; ++i)
        e.push_back({prefix + std::to_string(i), i});
    return make_table(std::move(e));
}

/// e_i(x_1..x_k) over the given variable table; e_0 = 1.
inline Poly elementary_polynomial(const TablePtr& xs, int i)
{
    const int k = static_cast<int>(xs->size());
    if (i < 0 || i > k)
        return Poly(xs);
    std::vector<Monomial> terms;
    // Subsets of size i via bitmasks.
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (std::popcount(mask) != i)
            continue;
        Monomial m;
        for (std::size_t j = 0; j < m.exponents.size(); ++j)
            if (mask & (1u << j))
                m.exponents[j] = 1;
        m.degree = i;
        terms.push_back(m);
    }
    return Poly(xs, std::move(terms));
}

/// Substitutes sigma_i -> e_i(x) into a polynomial over an elementary table.
inline Poly substitute_elementary(const Poly& sigma_poly, const TablePtr& xs)
{
    const std::size_t k = sigma_poly.table()->size();
    if (k != xs->size())
        throw ContractError("variable count mismatch");
    std::vector<Poly> e;
    for (std::size_t i = 1; i <= k; ++i)
        e.push_back(elementary_polynomial(xs, static_cast<int>(i)));
    Poly out(xs);
    for (const auto& m : sigma_poly.terms()) {
        Poly term = Poly::one(xs);
        for (std::size_t i = 0; i < k; ++i)
            for (int r = 0; r < m.exponents[i]; ++r)
                term = term * e[i];
        out += term;
    }
    return out;
}

class SymmetricPoly {
public:
    /// Throws ContractError unless p is over all-degree-1 variables and invariant
    /// under every transposition of them.
    explicit SymmetricPoly(Poly p) : poly_(std::move(p))
    {
        const auto& table = *poly_.table();
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table.degree(i) != 1)
                throw ContractError("symmetric polynomial variables must have degree 1");
        for (std::size_t a = 0; a < table.size(); ++a)
            for (std::size_t b = a + 1; b < table.size(); ++b)
                if (swapped(a, b) != poly_)
                    throw ContractError("polynomial is not symmetric: " + to_string(poly_));
    }

    const Poly& poly() const noexcept { return poly_; }
    int rank() const noexcept { return static_cast<int>(poly_.table()->size()); }

private:
    Poly swapped(std::size_t a, std::size_t b) const
    {
        std::vector<Monomial> terms;
        for (auto m : poly_.terms()) {
            std::swap(m.exponents[a], m.exponents[b]);
            terms.push_back(m);
        }
        return Poly(poly_.table(), std::move(terms));
    }

    Poly poly_;
};

/// A polynomial in sigma_1..sigma_k (degree sigma_i = i).
struct ElementaryExpansion {
    Poly poly;
};

/**
 * Classical leading-term algorithm: the graded-lex leading monomial x^lambda of a
 * symmetric polynomial has lambda_1 >= ... >= lambda_k, and it is also the leading
 * monomial of prod sigma_i^(lambda_i - lambda_{i+1}). Subtract and repeat.
 */
inline ElementaryExpansion expand_elementary(const SymmetricPoly& s, const std::string& prefix = "s")
{
    const int k = s.rank();
    const TablePtr& xs = s.poly().table();
    TablePtr sigmas = elementary_table(k, prefix);
    std::vector<Poly> e;
    for (int i = 1; i <= k; ++i)
        e.push_back(elementary_polynomial(xs, i));

    std::map<ExponentVector, Poly> cache;
    auto sigma_product = [&](const ExponentVector& c) -> const Poly& {
        auto it = cache.find(c);
        if (it != cache.end())
            return it->second;
        Poly prod = Poly::one(xs);
        for (int i = 0; i < k; ++i)
            for (int r = 0; r < c[static_cast<std::size_t>(i)]; ++r)
                prod = prod * e[static_cast<std::size_t>(i)];
        return cache.emplace(c, std::move(prod)).first->second;
    };

    Poly rest = s.poly();
    std::vector<Monomial> out;
    while (!rest.is_zero()) {
        const Monomial& lead = rest.lead();
        ExponentVector c{};
        for (int i = 0; i < k; ++i) {
            const int next = i + 1 < k ? lead.exponents[static_cast<std::size_t>(i + 1)] : 0;
            const int diff = lead.exponents[static_cast<std::size_t>(i)] - next;
            if (diff < 0)
                throw ContractError("leading exponent vector is not a partition; input not symmetric");
            c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(diff);
        }
        out.push_back(Monomial{sigmas->degree_of(c), c});
        rest += sigma_product(c);
    }
    return {Poly(sigmas, std::move(out))};
}

/// prod_{i,j=1..k} (1 + x_i + x_j) as a polynomial in w1..wk (w_i = sigma_i).
inline ElementaryExpansion build_pk(int k)
{
    if (k < 1 || k > kMaxSymmetricRank)
        throw UnsupportedError("p_k is only built for 1 <= k <= " + std::to_string(kMaxSymmetricRank));
    TablePtr xs = variable_table(k);
    Poly prod = Poly::one(xs);
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
            Poly factor = Poly::one(xs) + Poly::generator(xs, i) + Poly::generator(xs, j);
            prod = prod * factor;
        }
    }
    return expand_elementary(SymmetricPoly(std::move(prod)), "w");
}

/// p_k with w1 set to zero (the oriented case).
inline ElementaryExpansion oriented_pk(int k)
{
    ElementaryExpansion p = build_pk(k);
    return {substitute_zero(p.poly, 0)};
}

} // namespace skew
