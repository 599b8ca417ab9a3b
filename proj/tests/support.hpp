#pragma once

// Independent oracles and hand-rolled generators shared by the test suites.
// Nothing here calls poly_mul, series_inverse or the Groebner engine.

#include "skewbound/skewbound.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <vector>

namespace skew {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }

} // namespace skew

namespace skewtest {

using namespace skew;

/// Pascal's triangle mod 2, rows 0..n_max.
inline std::vector<std::vector<int>> pascal_parity(int n_max)
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n + 1), 1);
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] ^
                                               rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
    return rows;
}

inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Partitions of d with at most `parts` parts, each at most `largest`.
inline int partitions_in_box(int d, int parts, int largest)
{
    if (d == 0)
        return 1;
    if (parts == 0 || largest == 0 || d < 0)
        return 0;
    // Either no part equals `largest`, or remove one copy of it.
    return partitions_in_box(d, parts, largest - 1) + partitions_in_box(d - largest, parts - 1, largest);
}

/// Product by distributing every choice of one term per factor and counting parity.
inline Poly naive_product(const std::vector<Poly>& factors)
{
    const TablePtr table = factors.front().table();
    std::map<ExponentVector, std::pair<Monomial, int>> counts;
    std::vector<std::size_t> choice(factors.size(), 0);
    for (const auto& f : factors)
        if (f.is_zero())
            return Poly(table);
    while (true) {
        Monomial m;
        for (std::size_t i = 0; i < factors.size(); ++i)
            m = m * factors[i].terms()[choice[i]];
        auto& slot = counts[m.exponents];
        slot.first = m;
        slot.second ^= 1;
        std::size_t i = 0;
        while (i < factors.size() && ++choice[i] == factors[i].size())
            choice[i++] = 0;
        if (i == factors.size())
            break;
    }
    std::vector<Monomial> terms;
    for (const auto& [key, value] : counts)
        if (value.second)
            terms.push_back(value.first);
    return Poly(table, std::move(terms));
}

/// Squaring in characteristic 2 doubles every exponent.
inline Poly frobenius(const Poly& p)
{
    std::vector<Monomial> terms;
    for (auto m : p.terms()) {
        for (auto& e : m.exponents)
            e = static_cast<std::uint8_t>(2 * e);
        m.degree *= 2;
        terms.push_back(m);
    }
    return Poly(p.table(), std::move(terms));
}

/// Random polynomial with up to `max_terms` monomials of degree <= max_degree.
template <class Rng>
Poly random_poly(const TablePtr& table, int max_degree, int max_terms, Rng& rng)
{
    std::vector<Monomial> terms;
    const int count = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
    for (int i = 0; i < count; ++i) {
        const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
        auto monos = monomials_of_degree(*table, d);
        if (!monos.empty())
            terms.push_back(monos[rng() % monos.size()]);
    }
    return Poly(table, std::move(terms));
}

/// Random series with constant term 1.
template <class Rng>
GradedSeries random_unit_series(const TablePtr& table, int truncation, Rng& rng)
{
    Poly p = random_poly(table, truncation, 6, rng).truncated(truncation);
    p = p + p.component(0) + Poly::one(table);
    return GradedSeries::from_poly(p, truncation);
}

/// Every closed catalog atom with small dimension, used by the property suites.
inline std::vector<ManifoldData> catalog_atoms(int max_dimension)
{
    std::vector<ManifoldData> out;
    for (int n = 1; n <= max_dimension; ++n)
        out.push_back(real_projective(n));
    for (int n = 1; 2 * n <= max_dimension; ++n)
        out.push_back(complex_projective(n));
    for (int n = 1; n <= max_dimension; ++n)
        out.push_back(sphere(n));
    for (int k = 2; k <= 3; ++k)
        for (int ambient = k + 1; k * (ambient - k) <= max_dimension; ++ambient)
            out.push_back(grassmannian(k, ambient));
    return out;
}

inline std::vector<ManifoldData> catalog_with_oriented(int max_dimension)
{
    std::vector<ManifoldData> out = catalog_atoms(max_dimension);
    for (int k = 2; k <= 3; ++k)
        for (int ambient = k + 1; k * (ambient - k) <= max_dimension; ++ambient)
            out.push_back(oriented_grassmannian(k, ambient));
    return out;
}

inline Poly P(const ManifoldData& m, const char* text) { return parse_poly(m.ring->table(), text); }

} // namespace skewtest
