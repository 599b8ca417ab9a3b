#pragma once

/**
 * Brute-force cross-checks that share no code with the Groebner engine.
 *
 * In degree d the ideal generated by homogeneous relations is spanned by the
 * products m * r with r a relation and m any monomial of degree d - deg r. Zero
 * tests and quotient dimensions are then plain GF(2) Gaussian elimination.
 */

#include "skewbound/gf2.hpp"
#include "skewbound/linear.hpp"
#include "skewbound/quotient_ring.hpp"
#include "skewbound/symmetric.hpp"

#include <random>
#include <span>
#include <vector>

namespace skew {

struct DegreeSliceMatrix {
    int degree = 0;
    MonomialIndex index;
    Gf2Span relation_span;

    std::size_t monomial_count() const noexcept { return index.size(); }
    std::size_t rank() const noexcept { return relation_span.rank(); }
    std::size_t quotient_dimension() const noexcept { return index.size() - relation_span.rank(); }

    bool in_ideal(const Poly& p) const { return relation_span.contains(index.vector_of(p, degree)); }
};

inline DegreeSliceMatrix build_slice(const RingPresentation& presentation, int degree,
                                     std::span<const Poly> extra = {})
{
    const GeneratorTable& table = *presentation.table;
    DegreeSliceMatrix slice{degree, MonomialIndex(table, degree), Gf2Span(0)};
    slice.relation_span = Gf2Span(slice.index.size());
    auto add_generator = [&](const Poly& r) {
        if (!same_table(r.table(), presentation.table))
            throw ContractError("ideal generator over a different table");
        if (r.is_zero())
            return;
        for (int e = r.min_degree(); e <= std::min(r.max_degree(), degree); ++e) {
            Poly part = r.component(e);
            if (part.is_zero())
                continue;
            for (const auto& m : monomials_of_degree(table, degree - e))
                slice.relation_span.insert(slice.index.vector_of(part.times(m), degree));
        }
    };
    for (const auto& r : presentation.relations)
        add_generator(r);
    for (const auto& r : extra)
        add_generator(r);
    return slice;
}

/// True iff the homogeneous p (degree <= top) vanishes in the quotient.
inline bool slice_ideal_test(const RingPresentation& presentation, const Poly& p, std::span<const Poly> extra)
{
    if (p.is_zero())
        return true;
    if (!p.is_homogeneous())
        throw ContractError("slice tests need a homogeneous polynomial");
    if (p.degree() > presentation.top_dimension)
        throw ContractError("slice tests are limited to degrees <= top dimension");
    return build_slice(presentation, p.degree(), extra).in_ideal(p);
}

inline bool slice_zero_test(const RingPresentation& presentation, const Poly& p)
{
    return slice_ideal_test(presentation, p, {});
}

/// Substitutes the elementary symmetric polynomials and compares bit for bit.
inline bool expand_verify(const ElementaryExpansion& e, const SymmetricPoly& source)
{
    if (e.poly.table()->size() != source.poly().table()->size())
        return false;
    return substitute_elementary(e.poly, source.poly().table()) == source.poly();
}

/// Random homogeneous polynomial of degree d: each monomial present with probability 1/2.
template <class Rng>
Poly random_homogeneous(const TablePtr& table, int d, Rng& rng)
{
    std::vector<Monomial> terms;
    for (const auto& m : monomials_of_degree(*table, d))
        if (rng() & 1u)
            terms.push_back(m);
    return Poly(table, std::move(terms));
}

/// Random degree-d element of the ideal (sum of monomial multiples of relations),
/// plus a random monomial half of the time, so zero and non-zero classes both occur.
template <class Rng>
Poly random_mixed_element(const RingPresentation& presentation, int d, Rng& rng)
{
    const auto& table = presentation.table;
    Poly p(table);
    for (const auto& r : presentation.relations) {
        if (r.is_zero() || r.degree() > d)
            continue;
        for (const auto& m : monomials_of_degree(*table, d - r.degree()))
            if (rng() % 3 == 0)
                p += r.times(m);
    }
    if (rng() & 1u) {
        auto monos = monomials_of_degree(*table, d);
        if (!monos.empty())
            p += Poly::monomial(table, monos[rng() % monos.size()]);
    }
    return p;
}

} // namespace skew
