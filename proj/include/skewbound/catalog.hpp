#pragma once

#include "skewbound/gf2.hpp"
#include "skewbound/quotient_ring.hpp"
#include "skewbound/symmetric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skew {

/// Cohomology ring and total Stiefel-Whitney class of a closed manifold.
struct ManifoldData {
    std::string label;
    int dimension = 0;
    RingPtr ring;
    GradedSeries total_sw;
    // Generators of ker p^* for an oriented double cover; classes are then tested
    // through the unoriented ring modulo this ideal.
    std::optional<std::vector<Poly>> oriented_kernel;
    bool closed = true;
    int factor_count = 1;

    bool oriented() const noexcept { return oriented_kernel.has_value(); }
};

namespace detail {

inline ManifoldData truncated_projective(const std::string& label, int n, int generator_degree)
{
    if (n + 1 > kMaxExponent)
        throw UnsupportedError(label + ": exponents above " + std::to_string(kMaxExponent) + " are not representable");
    TablePtr table = make_table({{"t", generator_degree}});
    const int dim = n * generator_degree;
    RingPresentation pres{table, {Poly::generator(table, 0, n + 1)}, dim, label, {}};
    GradedSeries one_plus_t = GradedSeries::from_poly(Poly::one(table) + Poly::generator(table, 0), dim);
    return ManifoldData{label, dim, std::make_shared<const QuotientRing>(std::move(pres)),
                        series_pow(one_plus_t, static_cast<std::uint64_t>(n) + 1), std::nullopt, true, 1};
}

inline std::string grassmannian_label(int k, int ambient, bool oriented)
{
    return std::string(oriented ? "G~(" : "G(") + std::to_string(k) + "," + std::to_string(ambient) + ")";
}

// Re-express p over `target`, shifting generator i to i + offset.
inline Poly embed(const Poly& p, const TablePtr& target, std::size_t offset)
{
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        ExponentVector e{};
        for (std::size_t i = 0; i < p.table()->size(); ++i)
            e[i + offset] = m.exponents[i];
        terms.push_back(Monomial{target->degree_of(e), e});
    }
    return Poly(target, std::move(terms));
}

inline std::string factor_name(const std::string& name, int factor_count, int offset)
{
    if (factor_count == 1)
        return name + "." + std::to_string(offset + 1);
    const auto dot = name.rfind('.');
    const int index = std::stoi(name.substr(dot + 1));
    return name.substr(0, dot) + "." + std::to_string(index + offset);
}

} // namespace detail

/// Presentation relations of G_k(R^{n+k}): the degree n+1..n+k components of
/// (1 + w_1 + ... + w_k) * (wbar_0 + ... + wbar_n), wbar = (1 + w_1 + ... + w_k)^{-1}.
inline std::vector<Poly> grassmannian_relations(const TablePtr& table, int n)
{
    const int k = static_cast<int>(table->size());
    Poly w = Poly::one(table);
    for (std::size_t i = 0; i < table->size(); ++i)
        w += Poly::generator(table, i);
    GradedSeries wbar = series_inverse(GradedSeries::from_poly(w, n));
    Poly product = w * wbar.to_poly();
    std::vector<Poly> relations;
    for (int d = n + 1; d <= n + k; ++d)
        relations.push_back(product.component(d));
    return relations;
}

inline TablePtr grassmannian_table(int k)
{
    std::vector<GeneratorTable::Entry> e;
    for (int i = 1; i <= k; ++i)
        e.push_back({"w" + std::to_string(i), i});
    return make_table(std::move(e));
}

inline ManifoldData real_projective(int n)
{
    if (n < 1)
        throw InputError("RP(n) needs n >= 1");
    return detail::truncated_projective("RP(" + std::to_string(n) + ")", n, 1);
}

inline ManifoldData complex_projective(int n)
{
    if (n < 1)
        throw InputError("CP(n) needs n >= 1");
    return detail::truncated_projective("CP(" + std::to_string(n) + ")", n, 2);
}

inline ManifoldData sphere(int n)
{
    if (n < 1)
        throw InputError("S(n) needs n >= 1");
    const std::string label = "S(" + std::to_string(n) + ")";
    TablePtr table = make_table({{"z", n}});
    RingPresentation pres{table, {Poly::generator(table, 0, 2)}, n, label, {}};
    return ManifoldData{label, n, std::make_shared<const QuotientRing>(std::move(pres)),
                        GradedSeries::one(table, n), std::nullopt, true, 1};
}

/// G_k(R^ambient), k in {2, 3}; total class w(gamma)^ambient * p_k^{-1}.
inline ManifoldData grassmannian(int k, int ambient)
{
    if (k != 2 && k != 3)
        throw UnsupportedError("Grassmannians are supported for k = 2, 3 only");
    if (ambient < k + 1)
        throw InputError("G(k,m) needs m >= k + 1");
    const int n = ambient - k;
    const int dim = k * n;
    const std::string label = detail::grassmannian_label(k, ambient, false);
    if (dim + k > kMaxExponent)
        throw UnsupportedError(label + ": exponents above " + std::to_string(kMaxExponent) + " are not representable");
    TablePtr table = grassmannian_table(k);

    RingPresentation pres{table, grassmannian_relations(table, n), dim, label, std::vector<int>(static_cast<std::size_t>(k), 0)};

    Poly w = Poly::one(table);
    for (std::size_t i = 0; i < table->size(); ++i)
        w += Poly::generator(table, i);
    const Poly pk(table, build_pk(k).poly.terms());
    GradedSeries total = series_pow(GradedSeries::from_poly(w, dim), static_cast<std::uint64_t>(ambient)) *
                         series_inverse(GradedSeries::from_poly(pk, dim));
    return ManifoldData{label, dim, std::make_shared<const QuotientRing>(std::move(pres)), std::move(total),
                        std::nullopt, true, 1};
}

/// Oriented double cover: classes are pulled back from G_k, and ker p^* = (w1).
inline ManifoldData oriented_grassmannian(int k, int ambient)
{
    ManifoldData m = grassmannian(k, ambient);
    m.label = detail::grassmannian_label(k, ambient, true);
    m.oriented_kernel = std::vector<Poly>{Poly::generator(m.ring->table(), 0)};
    return m;
}

/// Cartesian product; generator names get a factor-index suffix (t.1, w2.2, ...).
inline ManifoldData product(const ManifoldData& a, const ManifoldData& b)
{
    if (a.oriented() || b.oriented())
        throw UnsupportedError("products with an oriented Grassmannian factor are not supported");
    const auto& ta = *a.ring->table();
    const auto& tb = *b.ring->table();
    if (ta.size() + tb.size() > kMaxGenerators)
        throw UnsupportedError("products are limited to " + std::to_string(kMaxGenerators) + " generators in total");
    std::vector<GeneratorTable::Entry> entries;
    for (const auto& e : ta.entries())
        entries.push_back({detail::factor_name(e.name, a.factor_count, 0), e.degree});
    for (const auto& e : tb.entries())
        entries.push_back({detail::factor_name(e.name, b.factor_count, a.factor_count), e.degree});
    TablePtr table = make_table(std::move(entries));

    const auto& pa = a.ring->presentation();
    const auto& pb = b.ring->presentation();
    RingPresentation pres;
    pres.table = table;
    pres.top_dimension = a.dimension + b.dimension;
    pres.label = a.label + "x" + b.label;
    for (const auto& r : pa.relations)
        pres.relations.push_back(detail::embed(r, table, 0));
    for (const auto& r : pb.relations)
        pres.relations.push_back(detail::embed(r, table, ta.size()));
    int family_offset = 0;
    for (int f : pa.sw_family) {
        pres.sw_family.push_back(f);
        family_offset = std::max(family_offset, f + 1);
    }
    for (int f : pb.sw_family)
        pres.sw_family.push_back(f + family_offset);

    const int dim = pres.top_dimension;
    // Reduce each factor's class first so the product stays small.
    Poly wa = detail::embed(a.ring->reduce(a.total_sw).to_poly(), table, 0);
    Poly wb = detail::embed(b.ring->reduce(b.total_sw).to_poly(), table, ta.size());
    GradedSeries total = GradedSeries::from_poly(poly_mul(wa, wb, dim), dim);

    return ManifoldData{pres.label, dim, std::make_shared<const QuotientRing>(std::move(pres)), std::move(total),
                        std::nullopt, a.closed && b.closed, a.factor_count + b.factor_count};
}

} // namespace skew
