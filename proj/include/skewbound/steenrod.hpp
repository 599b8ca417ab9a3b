#pragma once

#include "skewbound/gf2.hpp"
#include "skewbound/quotient_ring.hpp"

#include <vector>

namespace skew {

/**
 * Steenrod squares on a polynomial ring whose generators are Stiefel-Whitney
 * classes. Generator g of degree j in family f is read as w_j of bundle f; within a
 * family w_0 = 1 and a missing w_m is zero. Generators get Sq from Wu's formula,
 * products from the Cartan formula.
 */
class SteenrodAction {
public:
    SteenrodAction(TablePtr table, std::vector<int> sw_family)
        : table_(std::move(table)), family_(std::move(sw_family))
    {
        if (family_.empty())
            for (std::size_t i = 0; i < table_->size(); ++i)
                family_.push_back(static_cast<int>(i));
        if (family_.size() != table_->size())
            throw ContractError("sw_family must have one entry per generator");
        for (std::size_t g = 0; g < table_->size(); ++g)
            total_.push_back(compute_total(g));
    }

    explicit SteenrodAction(const QuotientRing& ring)
        : SteenrodAction(ring.table(), ring.presentation().sw_family)
    {
    }

    /// Wu: Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}; zero for i > j.
    Poly on_generator(int i, std::size_t gen) const
    {
        const int j = table_->degree(gen);
        Poly out(table_);
        if (i < 0 || i > j)
            return out;
        const int f = family_[gen];
        for (int t = 0; t <= i; ++t) {
            const int top = j - i + t - 1;
            const bool coeff = top < 0 ? t == 0 : lucas_binom(static_cast<std::uint64_t>(top), static_cast<std::uint64_t>(t));
            if (!coeff)
                continue;
            Poly a = sw_class(f, i - t);
            Poly b = sw_class(f, j + t);
            if (a.is_zero() || b.is_zero())
                continue;
            out += a * b;
        }
        return out;
    }

    /// Sq^i on a polynomial of the free ring (no reduction).
    Poly apply(int i, const Poly& p) const
    {
        if (!same_table(p.table(), table_))
            throw ContractError("polynomial is not over the Steenrod action's table");
        if (!p.is_homogeneous())
            throw ContractError("Sq^i needs a homogeneous argument");
        Poly out(table_);
        if (i < 0)
            return out;
        for (const auto& m : p.terms())
            out += apply(i, m);
        return out;
    }

    Poly apply(int i, const Monomial& m) const
    {
        const int target = m.degree + i;
        Poly prod = Poly::one(table_);
        for (std::size_t g = 0; g < table_->size(); ++g)
            for (int r = 0; r < m.exponents[g]; ++r)
                prod = poly_mul(prod, total_[g], target);
        return prod.component(target);
    }

    /// Total square Sq = sum_i Sq^i, on a homogeneous or inhomogeneous polynomial.
    Poly total(const Poly& p) const
    {
        Poly out(table_);
        for (const auto& m : p.terms()) {
            Poly prod = Poly::one(table_);
            for (std::size_t g = 0; g < table_->size(); ++g)
                for (int r = 0; r < m.exponents[g]; ++r)
                    prod = prod * total_[g];
            out += prod;
        }
        return out;
    }

private:
    Poly sw_class(int family, int m) const
    {
        if (m == 0)
            return Poly::one(table_);
        for (std::size_t g = 0; g < table_->size(); ++g)
            if (family_[g] == family && table_->degree(g) == m)
                return Poly::generator(table_, g);
        return Poly(table_);
    }

    Poly compute_total(std::size_t gen) const
    {
        Poly out(table_);
        for (int i = 0; i <= table_->degree(gen); ++i)
            out += on_generator(i, gen);
        return out;
    }

    TablePtr table_;
    std::vector<int> family_;
    std::vector<Poly> total_;
};

inline Poly sq_on_generator(const QuotientRing& ring, int i, std::size_t gen)
{
    return SteenrodAction(ring).on_generator(i, gen);
}

/// Sq^i(p) reduced to normal form in the ring.
inline Poly sq(int i, const Poly& p, const QuotientRing& ring)
{
    return ring.normal_form(SteenrodAction(ring).apply(i, p));
}

} // namespace skew
