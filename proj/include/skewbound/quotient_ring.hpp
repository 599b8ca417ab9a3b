#pragma once

#include "skewbound/gf2.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace skew {

/**
 * Graded presentation GF(2)[g_1..g_m] / (relations) of the mod-2 cohomology of
 * a closed manifold of dimension `top_dimension`. Everything above the top
 * dimension is zero in the quotient.
 *
 * `sw_family` groups generators into Stiefel-Whitney families for the Steenrod
 * action: generator i is the class w_{deg i} of bundle family sw_family[i].
 * Left empty, every generator forms its own family.
 */
struct RingPresentation {
    TablePtr table;
    std::vector<Poly> relations;
    int top_dimension = 0;
    std::string label;
    std::vector<int> sw_family;
};

namespace detail {

// Full reduction of p by `basis`; monomials above `cutoff` are dropped first.
inline Poly reduce_fully(Poly p, const std::vector<Poly>& basis, int cutoff)
{
    if (!p.is_zero() && p.max_degree() > cutoff)
        p = p.truncated(cutoff);
    Poly work = std::move(p);
    std::vector<Monomial> remainder;
    while (!work.is_zero()) {
        const Monomial lead = work.lead();
        const Poly* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.lead().divides(lead)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            work.add_multiple(reducer->lead().quotient_of(lead), *reducer);
        }
        else {
            remainder.push_back(lead);
            // Drop the lead: it is the first term.
            Poly rest(work.table(), std::vector<Monomial>(work.terms().begin() + 1, work.terms().end()));
            work = std::move(rest);
        }
    }
    return Poly(work.table(), std::move(remainder));
}

/// Reduced Groebner basis of the homogeneous ideal generated by `gens`, complete
/// in every degree up to `max_degree`.
inline std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, int max_degree)
{
    std::vector<Poly> basis;
    std::multimap<int, std::pair<std::size_t, std::size_t>> pairs;

    auto add_element = [&](Poly h) {
        const std::size_t idx = basis.size();
        for (std::size_t i = 0; i < idx; ++i) {
            const Monomial& a = basis[i].lead();
            const Monomial& b = h.lead();
            if (a.coprime(b))
                continue; // Buchberger's first criterion
            const int lcm_degree = h.table()->lcm(a, b).degree;
            if (lcm_degree <= max_degree)
                pairs.emplace(lcm_degree, std::make_pair(i, idx));
        }
        basis.push_back(std::move(h));
    };

    // Feed generators in ascending degree so low-degree elements reduce later ones.
    std::vector<Poly> sorted = gens;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    std::size_t next_gen = 0;

    while (next_gen < sorted.size() || !pairs.empty()) {
        // Process whichever comes first by degree: the next input generator or the next S-pair.
        const bool take_gen = next_gen < sorted.size() &&
                              (pairs.empty() || sorted[next_gen].degree() <= pairs.begin()->first);
        Poly h;
        if (take_gen) {
            h = reduce_fully(sorted[next_gen++], basis, max_degree);
        }
        else {
            auto [i, j] = pairs.begin()->second;
            pairs.erase(pairs.begin());
            const Poly& a = basis[i];
            const Poly& b = basis[j];
            const Monomial l = a.table()->lcm(a.lead(), b.lead());
            Poly s = a.times(a.lead().quotient_of(l));
            s.add_multiple(b.lead().quotient_of(l), b);
            h = reduce_fully(std::move(s), basis, max_degree);
        }
        if (!h.is_zero())
            add_element(std::move(h));
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& lj = basis[j].lead();
            const Monomial& li = basis[i].lead();
            if (lj.divides(li) && (lj != li || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // Interreduce tails.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Poly tail(minimal[i].table(),
                  std::vector<Monomial>(minimal[i].terms().begin() + 1, minimal[i].terms().end()));
        Poly g = Poly::monomial(minimal[i].table(), minimal[i].lead()) + reduce_fully(tail, others, max_degree);
        reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Poly& a, const Poly& b) { return a.lead() < b.lead(); });
    return reduced;
}

} // namespace detail

/**
 * Immutable quotient ring with an eagerly computed reduced Groebner basis
 * (graded lex, first generator heaviest) and per-degree standard-monomial bases.
 */
class QuotientRing {
public:
    explicit QuotientRing(RingPresentation presentation) : presentation_(std::move(presentation))
    {
        if (!presentation_.table)
            throw PresentationError("presentation has no generator table");
        if (presentation_.top_dimension < 0)
            throw PresentationError("negative top dimension");
        const auto& table = presentation_.table;
        if (presentation_.sw_family.empty()) {
            for (std::size_t i = 0; i < table->size(); ++i)
                presentation_.sw_family.push_back(static_cast<int>(i));
        }
        if (presentation_.sw_family.size() != table->size())
            throw PresentationError("sw_family must have one entry per generator");

        std::vector<Poly> gens;
        for (const auto& r : presentation_.relations) {
            if (!same_table(r.table(), table))
                throw PresentationError("relation over a different generator table");
            if (!r.is_homogeneous())
                throw PresentationError("relation is not homogeneous: " + to_string(r));
            if (!r.is_zero())
                gens.push_back(r);
        }
        cutoff_ = presentation_.top_dimension + table->max_degree();
        gb_ = detail::groebner_basis(gens, cutoff_);

        for (int d = 0; d <= presentation_.top_dimension; ++d) {
            std::vector<Monomial> standard;
            for (const auto& m : monomials_of_degree(*table, d))
                if (!divisible_by_lead(m))
                    standard.push_back(m);
            basis_.push_back(std::move(standard));
        }
    }

    const RingPresentation& presentation() const noexcept { return presentation_; }
    const TablePtr& table() const noexcept { return presentation_.table; }
    int top_dimension() const noexcept { return presentation_.top_dimension; }
    const std::string& label() const noexcept { return presentation_.label; }
    const std::vector<Poly>& groebner_basis() const noexcept { return gb_; }

    /// Unique combination of standard monomials congruent to p; zero iff p lies in the ideal.
    Poly normal_form(const Poly& p) const
    {
        check(p);
        return detail::reduce_fully(p.truncated(presentation_.top_dimension), gb_, cutoff_);
    }

    bool is_zero(const Poly& p) const { return normal_form(p).is_zero(); }

    /// Standard monomials of degree d (empty outside [0, top_dimension]).
    const std::vector<Monomial>& degree_basis(int d) const
    {
        static const std::vector<Monomial> empty;
        if (d < 0 || d > presentation_.top_dimension)
            return empty;
        return basis_[static_cast<std::size_t>(d)];
    }

    std::size_t total_dimension() const
    {
        std::size_t n = 0;
        for (const auto& b : basis_)
            n += b.size();
        return n;
    }

    /// The quotient by the ideal enlarged with `extra`.
    QuotientRing extended(std::span<const Poly> extra, std::string label_suffix = "/extra") const
    {
        RingPresentation p = presentation_;
        p.label += label_suffix;
        for (const auto& e : extra) {
            check(e);
            // Split into homogeneous components; the ideal they generate is the same
            // whenever the extra generators are homogeneous, which is the only case used.
            if (!e.is_homogeneous())
                throw ContractError("extra ideal generators must be homogeneous");
            p.relations.push_back(e);
        }
        return QuotientRing(std::move(p));
    }

    GradedSeries reduce(const GradedSeries& s) const
    {
        GradedSeries out(s.table(), s.truncation());
        for (int d = 0; d <= s.truncation(); ++d)
            out.set_component(d, normal_form(s.component(d)));
        return out;
    }

    /// Product in the ring, both factors and result kept in normal form.
    GradedSeries multiply(const GradedSeries& a, const GradedSeries& b) const
    {
        const int trunc = std::min({a.truncation(), b.truncation(), presentation_.top_dimension});
        GradedSeries out(a.table(), trunc);
        for (int d = 0; d <= trunc; ++d) {
            std::vector<Monomial> acc;
            for (int i = 0; i <= d; ++i) {
                Poly x = a.component(i);
                Poly y = b.component(d - i);
                for (const auto& s : x.terms())
                    for (const auto& t : y.terms())
                        acc.push_back(s * t);
            }
            out.set_component(d, normal_form(Poly(a.table(), std::move(acc))));
        }
        return out;
    }

    /// Inverse of a unit series computed in the ring (components reduced as they are produced).
    GradedSeries inverse(const GradedSeries& f) const
    {
        check(f.component(0));
        if (!normal_form(f.component(0)).is_one())
            throw NotInvertibleError("series constant term is not 1");
        const int trunc = std::min(f.truncation(), presentation_.top_dimension);
        GradedSeries fr = reduce(f.truncated(trunc));
        GradedSeries g(f.table(), trunc);
        g.set_component(0, Poly::one(f.table()));
        for (int d = 1; d <= trunc; ++d) {
            std::vector<Monomial> acc;
            for (int i = 1; i <= d; ++i) {
                Poly x = fr.component(i);
                if (x.is_zero())
                    continue;
                Poly y = g.component(d - i);
                for (const auto& s : x.terms())
                    for (const auto& t : y.terms())
                        acc.push_back(s * t);
            }
            g.set_component(d, normal_form(Poly(f.table(), std::move(acc))));
        }
        return g;
    }

private:
    void check(const Poly& p) const
    {
        if (!same_table(p.table(), presentation_.table))
            throw ContractError("polynomial is not over this ring's generator table");
    }

    bool divisible_by_lead(const Monomial& m) const
    {
        for (const auto& g : gb_)
            if (g.lead().divides(m))
                return true;
        return false;
    }

    RingPresentation presentation_;
    int cutoff_ = 0;
    std::vector<Poly> gb_;
    std::vector<std::vector<Monomial>> basis_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

inline QuotientRing build(RingPresentation presentation) { return QuotientRing(std::move(presentation)); }

inline Poly normal_form(const QuotientRing& ring, const Poly& p) { return ring.normal_form(p); }

inline const std::vector<Monomial>& degree_basis(const QuotientRing& ring, int d) { return ring.degree_basis(d); }

/// True iff p lies in the ideal of ring relations plus `extra`.
inline bool ideal_membership(const QuotientRing& ring, const Poly& p, std::span<const Poly> extra)
{
    if (p.is_zero())
        return true;
    if (extra.empty())
        return ring.is_zero(p);
    return ring.extended(extra).is_zero(p);
}

/// Largest m with p^m non-zero in the ring; 0 when p itself vanishes.
inline int height(const QuotientRing& ring, const Poly& p)
{
    if (p.is_zero() || !p.is_homogeneous() || p.degree() == 0)
        throw ContractError("height needs a non-zero homogeneous element of positive degree");
    const int deg = p.degree();
    Poly power = ring.normal_form(p);
    int m = 0;
    while (!power.is_zero() && (m + 1) * deg <= ring.top_dimension()) {
        ++m;
        power = ring.normal_form(power * p);
    }
    return m;
}

} // namespace skew
