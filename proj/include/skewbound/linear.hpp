#pragma once

// Dense GF(2) vectors and an incrementally maintained reduced row-echelon span.

#include "skewbound/gf2.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace skew {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVector& operator^=(const BitVector& other)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
        return *this;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Index of the lowest set bit; size() when none.
    std::size_t first_set() const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return bits_;
    }

    bool operator==(const BitVector&) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Span of GF(2) vectors kept in reduced row-echelon form.
class Gf2Span {
public:
    explicit Gf2Span(std::size_t bits) : bits_(bits) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t ambient_dimension() const noexcept { return bits_; }
    const std::vector<BitVector>& rows() const noexcept { return rows_; }

    BitVector reduce(BitVector v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v.test(pivots_[r]))
                v ^= rows_[r];
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).none(); }

    /// Returns true if v was independent of the current rows.
    bool insert(const BitVector& v)
    {
        BitVector r = reduce(v);
        const std::size_t pivot = r.first_set();
        if (pivot == bits_)
            return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].test(pivot))
                rows_[i] ^= r;
        rows_.push_back(std::move(r));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::size_t bits_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates of homogeneous polynomials of one degree over a fixed monomial list.
class MonomialIndex {
public:
    MonomialIndex(const GeneratorTable& table, int degree) : monomials_(monomials_of_degree(table, degree))
    {
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            index_.emplace(monomials_[i].exponents, i);
    }

    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

    /// Coefficient vector of the part of p lying in this degree.
    BitVector vector_of(const Poly& p, int degree) const
    {
        BitVector v(monomials_.size());
        for (const auto& t : p.terms()) {
            if (t.degree != degree)
                continue;
            v.flip(index_.at(t.exponents));
        }
        return v;
    }

private:
    std::vector<Monomial> monomials_;
    std::map<ExponentVector, std::size_t> index_;
};

} // namespace skew
