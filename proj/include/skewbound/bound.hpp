#pragma once

#include "skewbound/catalog.hpp"
#include "skewbound/gf2.hpp"
#include "skewbound/linear.hpp"
#include "skewbound/quotient_ring.hpp"

#include <array>
#include <string>

namespace skew {

/**
 * Lower bound for a totally skew embedding from the dual Stiefel-Whitney class.
 *
 * With k the top degree of a non-vanishing dual class, the normal bundle of the
 * configuration space carries a non-zero class in degree 2k, so N >= 2n + 2k + 1.
 */
struct BoundReport {
    std::string label;
    int dimension = 0;
    int alpha = 0;
    int kmax = 0;
    Poly witness;            // surviving top dual class in normal form; zero iff kmax == 0
    std::string witness_text;
    int lower_bound = 0;     // 2n + 2 kmax + 1
    int generic_lower = 0;   // 2n + 2 for closed manifolds, 2n + 1 otherwise
    int massey_cap = 0;      // n - alpha(n)
    int conjectured_upper = 0;
    int literature_upper = 0;

    int best_lower() const noexcept { return std::max(lower_bound, generic_lower); }

    std::string source_of_best_lower() const
    {
        return lower_bound >= generic_lower ? "dual-class" : "generic-closed";
    }
};

/// The ring in which classes of m are tested: H*(M), or H*(G_k)/(w1) for oriented
/// Grassmannians (the image of p^*).
inline QuotientRing detection_ring(const ManifoldData& m)
{
    if (m.oriented())
        return m.ring->extended(*m.oriented_kernel, "/ker p*");
    return *m.ring;
}

/// Dual class w(M)^{-1}, each component in normal form of the (unoriented) ring.
inline GradedSeries dual_class(const ManifoldData& m)
{
    return m.ring->inverse(m.total_sw.truncated(m.dimension));
}

struct KmaxResult {
    int degree = 0;
    Poly witness;
};

/// Largest degree whose dual component is non-zero in the detection ring.
inline KmaxResult kmax(const ManifoldData& m, const GradedSeries& dual)
{
    const QuotientRing ring = detection_ring(m);
    for (int d = m.dimension; d >= 1; --d) {
        Poly c = ring.normal_form(dual.component(d));
        if (!c.is_zero())
            return {d, std::move(c)};
    }
    return {0, Poly(m.ring->table())};
}

inline KmaxResult kmax(const ManifoldData& m) { return kmax(m, dual_class(m)); }

inline BoundReport assemble_report(const ManifoldData& m, KmaxResult k)
{
    BoundReport r;
    const int n = m.dimension;
    r.label = m.label;
    r.dimension = n;
    r.alpha = alpha(static_cast<std::uint64_t>(n));
    r.kmax = k.degree;
    r.witness = std::move(k.witness);
    r.witness_text = to_string(r.witness);
    r.lower_bound = 2 * n + 2 * r.kmax + 1;
    r.generic_lower = m.closed ? 2 * n + 2 : 2 * n + 1;
    r.massey_cap = n - r.alpha;
    r.conjectured_upper = 4 * n - 2 * r.alpha + 1;
    r.literature_upper = 4 * n + 1;
    return r;
}

inline BoundReport bound(const ManifoldData& m) { return assemble_report(m, kmax(m)); }

/// Table w2, w3 (degrees 2, 3) of the free ring holding the g_k polynomials.
inline TablePtr oriented_rank3_table() { return make_table({{"w2", 2}, {"w3", 3}}); }

/// g_k = sum_{ceil(k/3) <= i <= floor(k/2)} C(i, 3i-k) w2^{3i-k} w3^{k-2i},
/// the degree-k part of (1 + w2 + w3)^{-1}.
inline Poly g_polynomial(const TablePtr& table, int k)
{
    Poly g(table);
    if (k < 0)
        return g;
    for (int i = (k + 2) / 3; i <= k / 2; ++i) {
        if (!lucas_binom(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(3 * i - k)))
            continue;
        g += Poly::monomial(table, table->monomial({3 * i - k, k - 2 * i}));
    }
    return g;
}

/// Membership criterion for ker p^* on classes in w2, w3 of G_3(R^n): the ideal
/// J_{n,3} of GF(2)[w2, w3] generated by g_{n-2}, g_{n-1}, g_n.
struct JCriterion {
    int ambient = 0;  // n in G_3(R^n)
    int r = 0;        // 2^r < n <= 2^{r+1}
    TablePtr table;
    std::array<Poly, 3> generators;  // g_{n-2}, g_{n-1}, g_n
};

inline JCriterion j_criterion(int ambient)
{
    if (ambient < 4)
        throw InputError("the J criterion needs n >= 4");
    JCriterion c;
    c.ambient = ambient;
    while ((2 << c.r) < ambient)
        ++c.r;
    c.table = oriented_rank3_table();
    for (int i = 0; i < 3; ++i)
        c.generators[static_cast<std::size_t>(i)] = g_polynomial(c.table, ambient - 2 + i);
    return c;
}

/// True iff p (over w2, w3) lies in J, tested degree by degree with linear algebra.
inline bool j_membership(const JCriterion& c, const Poly& p)
{
    if (!same_table(p.table(), c.table))
        throw ContractError("J-membership needs a polynomial in w2, w3");
    if (p.is_zero())
        return true;
    for (int d = p.min_degree(); d <= p.max_degree(); ++d) {
        Poly comp = p.component(d);
        if (comp.is_zero())
            continue;
        MonomialIndex index(*c.table, d);
        Gf2Span span(index.size());
        for (const auto& g : c.generators) {
            if (g.is_zero() || g.degree() > d)
                continue;
            for (const auto& m : monomials_of_degree(*c.table, d - g.degree()))
                span.insert(index.vector_of(g.times(m), d));
        }
        if (!span.contains(index.vector_of(comp, d)))
            return false;
    }
    return true;
}

} // namespace skew
