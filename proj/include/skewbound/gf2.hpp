#pragma once

/**
 * Polynomials over the two-element field in graded generators.
 *
 * Every polynomial carries a shared, immutable GeneratorTable that fixes the
 * generator names and degrees. Coefficients are implicit: a monomial is either
 * present (coefficient 1) or absent, so addition is symmetric difference.
 *
 * Terms are kept sorted in descending graded-lexicographic order: total
 * (weighted) degree first, then lexicographic on the exponent vector with the
 * first generator heaviest. The leading term is therefore `terms().front()`.
 */

#include "skewbound/errors.hpp"

#include <algorithm>
#include <bit>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skew {

inline constexpr std::size_t kMaxGenerators = 8;
inline constexpr int kMaxExponent = 255;

using ExponentVector = std::array<std::uint8_t, kMaxGenerators>;

struct Monomial {
    int degree = 0;           // weighted total degree, consistent with the owning table
    ExponentVector exponents{};

    auto operator<=>(const Monomial&) const = default;

    bool is_one() const noexcept { return degree == 0 && exponents == ExponentVector{}; }

    bool divides(const Monomial& other) const noexcept
    {
        for (std::size_t i = 0; i < kMaxGenerators; ++i)
            if (exponents[i] > other.exponents[i])
                return false;
        return true;
    }

    // Caller guarantees divides(other).
    Monomial quotient_of(const Monomial& other) const noexcept
    {
        Monomial q;
        q.degree = other.degree - degree;
        for (std::size_t i = 0; i < kMaxGenerators; ++i)
            q.exponents[i] = static_cast<std::uint8_t>(other.exponents[i] - exponents[i]);
        return q;
    }

    bool coprime(const Monomial& other) const noexcept
    {
        for (std::size_t i = 0; i < kMaxGenerators; ++i)
            if (exponents[i] != 0 && other.exponents[i] != 0)
                return false;
        return true;
    }
};

inline Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.degree = a.degree + b.degree;
    for (std::size_t i = 0; i < kMaxGenerators; ++i) {
        int e = a.exponents[i] + b.exponents[i];
        if (e > kMaxExponent)
            throw ContractError("monomial exponent overflow");
        m.exponents[i] = static_cast<std::uint8_t>(e);
    }
    return m;
}

class GeneratorTable {
public:
    struct Entry {
        std::string name;
        int degree = 1;
        bool operator==(const Entry&) const = default;
    };

    GeneratorTable() = default;

    explicit GeneratorTable(std::vector<Entry> entries) : entries_(std::move(entries))
    {
        if (entries_.size() > kMaxGenerators)
            throw ContractError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.degree < 1)
                throw ContractError("generator '" + e.name + "' must have positive degree");
            if (e.name.empty())
                throw ContractError("generator names must be non-empty");
            for (std::size_t j = 0; j < i; ++j)
                if (entries_[j].name == e.name)
                    throw ContractError("duplicate generator name '" + e.name + "'");
        }
    }

    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const std::string& name(std::size_t i) const { return entries_.at(i).name; }
    int degree(std::size_t i) const { return entries_.at(i).degree; }

    int max_degree() const noexcept
    {
        int d = 0;
        for (const auto& e : entries_)
            d = std::max(d, e.degree);
        return d;
    }

    std::optional<std::size_t> index_of(std::string_view name) const noexcept
    {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].name == name)
                return i;
        return std::nullopt;
    }

    int degree_of(const ExponentVector& exps) const noexcept
    {
        int d = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            d += exps[i] * entries_[i].degree;
        return d;
    }

    Monomial monomial(std::span<const int> exps) const
    {
        if (exps.size() > entries_.size())
            throw ContractError("exponent vector longer than generator table");
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > kMaxExponent)
                throw ContractError("exponent out of range");
            m.exponents[i] = static_cast<std::uint8_t>(exps[i]);
        }
        m.degree = degree_of(m.exponents);
        return m;
    }

    Monomial monomial(std::initializer_list<int> exps) const
    {
        return monomial(std::span<const int>(exps.begin(), exps.size()));
    }

    Monomial generator(std::size_t i, int power = 1) const
    {
        if (i >= entries_.size())
            throw ContractError("generator index out of range");
        if (power < 0 || power > kMaxExponent)
            throw ContractError("exponent out of range");
        Monomial m;
        m.exponents[i] = static_cast<std::uint8_t>(power);
        m.degree = power * entries_[i].degree;
        return m;
    }

    Monomial lcm(const Monomial& a, const Monomial& b) const noexcept
    {
        Monomial m;
        for (std::size_t i = 0; i < kMaxGenerators; ++i)
            m.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
        m.degree = degree_of(m.exponents);
        return m;
    }

    bool operator==(const GeneratorTable&) const = default;

private:
    std::vector<Entry> entries_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

inline TablePtr make_table(std::vector<GeneratorTable::Entry> entries)
{
    return std::make_shared<const GeneratorTable>(std::move(entries));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) noexcept
{
    return a == b || (a && b && *a == *b);
}

/// All monomials of weighted degree d, ascending lexicographic on exponents.
inline std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    const std::size_t n = table.size();
    if (n == 0) {
        if (d == 0)
            out.push_back(Monomial{});
        return out;
    }
    ExponentVector exps{};
    // Depth-first over generators; the last generator absorbs the remainder.
    auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
        const int deg = table.degree(i);
        if (i + 1 == n) {
            if (remaining % deg == 0 && remaining / deg <= kMaxExponent) {
                exps[i] = static_cast<std::uint8_t>(remaining / deg);
                out.push_back(Monomial{d, exps});
                exps[i] = 0;
            }
            return;
        }
        for (int e = 0; e * deg <= remaining && e <= kMaxExponent; ++e) {
            exps[i] = static_cast<std::uint8_t>(e);
            self(self, i + 1, remaining - e * deg);
        }
        exps[i] = 0;
    };
    recurse(recurse, 0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
    return out;
}

class Poly {
public:
    Poly() = default;
    explicit Poly(TablePtr table) : table_(std::move(table)) {}

    Poly(TablePtr table, std::vector<Monomial> terms) : table_(std::move(table)), terms_(std::move(terms))
    {
        canonicalize(terms_);
    }

    static Poly zero(TablePtr table) { return Poly(std::move(table)); }

    static Poly one(TablePtr table)
    {
        Poly p(std::move(table));
        p.terms_.push_back(Monomial{});
        return p;
    }

    static Poly monomial(TablePtr table, const Monomial& m)
    {
        Poly p(std::move(table));
        p.terms_.push_back(m);
        return p;
    }

    static Poly generator(TablePtr table, std::size_t i, int power = 1)
    {
        Monomial m = table->generator(i, power);
        return monomial(std::move(table), m);
    }

    const TablePtr& table() const noexcept { return table_; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_.front().is_one(); }

    const Monomial& lead() const
    {
        if (terms_.empty())
            throw ContractError("leading term of the zero polynomial");
        return terms_.front();
    }

    bool contains(const Monomial& m) const
    {
        return std::binary_search(terms_.begin(), terms_.end(), m, std::greater<>());
    }

    bool is_homogeneous() const noexcept
    {
        return terms_.empty() || terms_.front().degree == terms_.back().degree;
    }

    int degree() const { return lead().degree; }

    // Highest/lowest degree present; requires non-zero.
    int max_degree() const { return terms_.front().degree; }
    int min_degree() const { return lead(), terms_.back().degree; }

    Poly& operator+=(const Poly& other)
    {
        check_table(other);
        if (other.terms_.empty())
            return *this;
        std::vector<Monomial> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        while (a != terms_.end() && b != other.terms_.end()) {
            if (*a > *b)
                merged.push_back(*a++);
            else if (*b > *a)
                merged.push_back(*b++);
            else {
                ++a;
                ++b;
            }
        }
        merged.insert(merged.end(), a, terms_.end());
        merged.insert(merged.end(), b, other.terms_.end());
        terms_ = std::move(merged);
        return *this;
    }

    // this += m * other, without materializing m * other.
    void add_multiple(const Monomial& m, const Poly& other)
    {
        check_table(other);
        std::vector<Monomial> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        while (a != terms_.end() && b != other.terms_.end()) {
            Monomial mb = m * *b;
            if (*a > mb)
                merged.push_back(*a++);
            else if (mb > *a) {
                merged.push_back(mb);
                ++b;
            }
            else {
                ++a;
                ++b;
            }
        }
        merged.insert(merged.end(), a, terms_.end());
        for (; b != other.terms_.end(); ++b)
            merged.push_back(m * *b);
        terms_ = std::move(merged);
    }

    Poly times(const Monomial& m) const
    {
        Poly p(table_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            p.terms_.push_back(m * t);
        return p;
    }

    /// Degree-d part (zero if absent).
    Poly component(int d) const
    {
        Poly p(table_);
        for (const auto& t : terms_)
            if (t.degree == d)
                p.terms_.push_back(t);
        return p;
    }

    Poly truncated(int max_degree) const
    {
        Poly p(table_);
        for (const auto& t : terms_)
            if (t.degree <= max_degree)
                p.terms_.push_back(t);
        return p;
    }

    bool operator==(const Poly& other) const
    {
        return same_table(table_, other.table_) && terms_ == other.terms_;
    }

    void check_table(const Poly& other) const
    {
        if (!same_table(table_, other.table_))
            throw ContractError("polynomials over different generator tables");
    }

    // Sort descending and cancel duplicate pairs.
    static void canonicalize(std::vector<Monomial>& terms)
    {
        std::sort(terms.begin(), terms.end(), std::greater<>());
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i])
                ++j;
            if ((j - i) % 2 == 1)
                terms[out++] = terms[i];
            i = j;
        }
        terms.resize(out);
    }

private:
    TablePtr table_;
    std::vector<Monomial> terms_;
};

inline Poly operator+(Poly a, const Poly& b)
{
    a += b;
    return a;
}

/// GF(2) product; monomials above `truncation` are dropped when it is given.
inline Poly poly_mul(const Poly& a, const Poly& b, std::optional<int> truncation = std::nullopt)
{
    a.check_table(b);
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            if (truncation && x.degree + y.degree > *truncation)
                continue;
            out.push_back(x * y);
        }
    }
    return Poly(a.table(), std::move(out));
}

inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

inline Poly homogeneous_component(const Poly& p, int d) { return p.component(d); }

/// Ring homomorphism sending generator `index` to zero.
inline Poly substitute_zero(const Poly& p, std::size_t index)
{
    if (!p.table() || index >= p.table()->size())
        throw ContractError("generator index out of range");
    std::vector<Monomial> kept;
    for (const auto& t : p.terms())
        if (t.exponents[index] == 0)
            kept.push_back(t);
    return Poly(p.table(), std::move(kept));
}

/// C(n, k) mod 2 by Lucas: odd iff the binary digits of k are a subset of those of n.
constexpr bool lucas_binom(std::uint64_t n, std::uint64_t k) noexcept
{
    return k <= n && (k & ~n) == 0;
}

/// Number of ones in the binary expansion of n.
constexpr int alpha(std::uint64_t n) noexcept { return std::popcount(n); }

inline std::string to_string(const Monomial& m, const GeneratorTable& table)
{
    if (m.is_one())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (m.exponents[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += table.name(i);
        if (m.exponents[i] > 1)
            s += '^' + std::to_string(m.exponents[i]);
    }
    return s;
}

/// Canonical text: terms in descending graded-lex order joined by " + ".
inline std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        if (!s.empty())
            s += " + ";
        s += to_string(t, *p.table());
    }
    return s;
}

/// Parses the output of to_string (whitespace-insensitive; factors may be
/// separated by '*' or juxtaposed with spaces).
inline Poly parse_poly(const TablePtr& table, std::string_view text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected integer", pos, {"integer"});
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '~';
    };

    std::vector<Monomial> terms;
    skip_ws();
    if (pos == text.size())
        throw ParseError("empty polynomial", pos, {"term"});
    while (true) {
        skip_ws();
        std::array<int, kMaxGenerators> exps{};
        bool any_factor = false;
        bool zero_term = false;
        while (pos < text.size() && text[pos] != '+') {
            if (any_factor && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                int c = read_int();
                if (c % 2 == 0)
                    zero_term = true;
            }
            else {
                std::size_t start = pos;
                while (pos < text.size() && is_name_char(text[pos]))
                    ++pos;
                if (start == pos)
                    throw ParseError("expected generator name", pos, {"generator", "integer"});
                std::string_view name = text.substr(start, pos - start);
                auto idx = table->index_of(name);
                if (!idx)
                    throw ParseError("unknown generator '" + std::string(name) + "'", start, {"generator"});
                int e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = read_int();
                }
                exps[*idx] += e;
            }
            any_factor = true;
            skip_ws();
        }
        if (!any_factor)
            throw ParseError("expected term", pos, {"generator", "integer"});
        if (!zero_term)
            terms.push_back(table->monomial(std::span<const int>(exps.data(), table->size())));
        if (pos == text.size())
            break;
        ++pos; // '+'
    }
    return Poly(table, std::move(terms));
}

/**
 * Degree-indexed homogeneous components, truncated at a fixed degree.
 * Component d is stored at index d; everything above `truncation` is dropped.
 */
class GradedSeries {
public:
    GradedSeries() = default;

    GradedSeries(TablePtr table, int truncation) : table_(std::move(table)), truncation_(truncation)
    {
        if (truncation_ < 0)
            throw ContractError("negative truncation degree");
        components_.assign(static_cast<std::size_t>(truncation_) + 1, Poly(table_));
    }

    static GradedSeries from_poly(const Poly& p, int truncation)
    {
        GradedSeries s(p.table(), truncation);
        std::vector<std::vector<Monomial>> buckets(static_cast<std::size_t>(truncation) + 1);
        for (const auto& t : p.terms())
            if (t.degree <= truncation)
                buckets[static_cast<std::size_t>(t.degree)].push_back(t);
        for (int d = 0; d <= truncation; ++d)
            s.components_[static_cast<std::size_t>(d)] = Poly(p.table(), std::move(buckets[static_cast<std::size_t>(d)]));
        return s;
    }

    static GradedSeries one(TablePtr table, int truncation) { return from_poly(Poly::one(table), truncation); }

    const TablePtr& table() const noexcept { return table_; }
    int truncation() const noexcept { return truncation_; }

    Poly component(int d) const
    {
        if (d < 0 || d > truncation_)
            return Poly(table_);
        return components_[static_cast<std::size_t>(d)];
    }

    void set_component(int d, Poly p)
    {
        if (d < 0 || d > truncation_)
            throw ContractError("component degree outside truncation range");
        for (const auto& t : p.terms())
            if (t.degree != d)
                throw ContractError("component is not homogeneous of its degree");
        components_[static_cast<std::size_t>(d)] = std::move(p);
    }

    Poly to_poly() const
    {
        Poly p(table_);
        for (const auto& c : components_)
            p += c;
        return p;
    }

    bool is_one() const
    {
        for (int d = 0; d <= truncation_; ++d) {
            const auto& c = components_[static_cast<std::size_t>(d)];
            if (d == 0 ? !c.is_one() : !c.is_zero())
                return false;
        }
        return true;
    }

    /// Largest degree with a non-zero component, or -1 for the zero series.
    int top_degree() const
    {
        for (int d = truncation_; d >= 0; --d)
            if (!components_[static_cast<std::size_t>(d)].is_zero())
                return d;
        return -1;
    }

    GradedSeries truncated(int degree) const
    {
        GradedSeries s(table_, degree);
        for (int d = 0; d <= std::min(degree, truncation_); ++d)
            s.components_[static_cast<std::size_t>(d)] = components_[static_cast<std::size_t>(d)];
        return s;
    }

    bool operator==(const GradedSeries& other) const
    {
        return same_table(table_, other.table_) && truncation_ == other.truncation_ &&
               components_ == other.components_;
    }

private:
    TablePtr table_;
    int truncation_ = 0;
    std::vector<Poly> components_;
};

inline Poly homogeneous_component(const GradedSeries& f, int d) { return f.component(d); }

/// Product truncated at the smaller of the two truncation degrees.
inline GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
{
    const int trunc = std::min(a.truncation(), b.truncation());
    return GradedSeries::from_poly(poly_mul(a.to_poly(), b.to_poly(), trunc), trunc);
}

inline GradedSeries series_pow(const GradedSeries& f, std::uint64_t e)
{
    if (e == 0)
        return GradedSeries::one(f.table(), f.truncation());
    GradedSeries result = GradedSeries::one(f.table(), f.truncation());
    GradedSeries base = f;
    // Square-and-multiply; each product drops overflow eagerly.
    while (true) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e == 0)
            break;
        base = base * base;
    }
    return result;
}

/// Multiplicative inverse of a series with constant term 1, degree by degree:
/// g_0 = 1, g_d = sum_{0<i<=d} f_i g_{d-i}.
inline GradedSeries series_inverse(const GradedSeries& f)
{
    if (!f.component(0).is_one())
        throw NotInvertibleError("series constant term is not 1");
    const int trunc = f.truncation();
    GradedSeries g(f.table(), trunc);
    g.set_component(0, Poly::one(f.table()));
    std::vector<Poly> fc;
    for (int d = 0; d <= trunc; ++d)
        fc.push_back(f.component(d));
    for (int d = 1; d <= trunc; ++d) {
        std::vector<Monomial> acc;
        for (int i = 1; i <= d; ++i) {
            const Poly& fi = fc[static_cast<std::size_t>(i)];
            if (fi.is_zero())
                continue;
            Poly gj = g.component(d - i);
            for (const auto& x : fi.terms())
                for (const auto& y : gj.terms())
                    acc.push_back(x * y);
        }
        g.set_component(d, Poly(f.table(), std::move(acc)));
    }
    return g;
}

inline GradedSeries substitute_zero(const GradedSeries& f, std::size_t index)
{
    return GradedSeries::from_poly(substitute_zero(f.to_poly(), index), f.truncation());
}

} // namespace skew
