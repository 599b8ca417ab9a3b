#pragma once

// Manifold expressions: RP(n) | CP(n) | S(n) | G(k,m) | G~(k,m), joined by 'x'.
// m is the ambient dimension, so G(3,7) is G_3(R^7).

#include "skewbound/catalog.hpp"
#include "skewbound/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

enum class AtomKind { RealProjective, ComplexProjective, Sphere, Grassmannian, OrientedGrassmannian };

struct Atom {
    AtomKind kind = AtomKind::RealProjective;
    int first = 0;
    int second = 0;  // ambient dimension for Grassmannians
    bool operator==(const Atom&) const = default;
};

struct ManifoldExpr {
    std::vector<Atom> factors;
    bool operator==(const ManifoldExpr&) const = default;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ManifoldExpr parse()
    {
        ManifoldExpr expr;
        std::vector<std::size_t> offsets;
        skip_ws();
        offsets.push_back(pos_);
        expr.factors.push_back(atom());
        skip_ws();
        while (pos_ < text_.size()) {
            if (text_[pos_] != 'x' && text_[pos_] != 'X')
                fail("expected product sign or end of input", {"x", "end of input"});
            ++pos_;
            skip_ws();
            offsets.push_back(pos_);
            expr.factors.push_back(atom());
            skip_ws();
        }
        if (expr.factors.size() > 1) {
            for (std::size_t i = 0; i < expr.factors.size(); ++i)
                if (expr.factors[i].kind == AtomKind::OrientedGrassmannian)
                    throw ParseError("oriented Grassmannian factors cannot appear inside a product", offsets[i],
                                     {"RP", "CP", "S", "G"});
        }
        return expr;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const
    {
        throw ParseError(message, pos_, std::move(expected));
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'", {std::string(1, c)});
        ++pos_;
    }

    int integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) {
            fail("expected a non-negative integer argument", {"integer"});
        }
        if (pos_ - start > 6) {
            pos_ = start;
            fail("integer argument too large", {"integer < 1000000"});
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    Atom atom()
    {
        const std::vector<std::string> atoms{"RP", "CP", "S", "G", "G~"};
        Atom a;
        if (accept("RP"))
            a.kind = AtomKind::RealProjective;
        else if (accept("CP"))
            a.kind = AtomKind::ComplexProjective;
        else if (accept("S"))
            a.kind = AtomKind::Sphere;
        else if (accept("G")) {
            skip_ws();
            a.kind = accept("~") ? AtomKind::OrientedGrassmannian : AtomKind::Grassmannian;
        }
        else
            fail("unknown manifold atom", atoms);

        expect('(');
        if (a.kind == AtomKind::Grassmannian || a.kind == AtomKind::OrientedGrassmannian) {
            skip_ws();
            const std::size_t k_offset = pos_;
            a.first = integer();
            if (a.first != 2 && a.first != 3)
                throw ParseError("Grassmannians are supported for k = 2, 3 only", k_offset, {"2", "3"});
            expect(',');
            a.second = integer();
        }
        else {
            a.first = integer();
        }
        expect(')');
        return a;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ManifoldExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string print(const Atom& a)
{
    switch (a.kind) {
    case AtomKind::RealProjective:
        return "RP(" + std::to_string(a.first) + ")";
    case AtomKind::ComplexProjective:
        return "CP(" + std::to_string(a.first) + ")";
    case AtomKind::Sphere:
        return "S(" + std::to_string(a.first) + ")";
    case AtomKind::Grassmannian:
        return "G(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
    case AtomKind::OrientedGrassmannian:
        return "G~(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
    }
    return {};
}

inline std::string print(const ManifoldExpr& e)
{
    std::string s;
    for (const auto& a : e.factors) {
        if (!s.empty())
            s += 'x';
        s += print(a);
    }
    return s;
}

inline ManifoldData build_atom(const Atom& a)
{
    switch (a.kind) {
    case AtomKind::RealProjective:
        return real_projective(a.first);
    case AtomKind::ComplexProjective:
        return complex_projective(a.first);
    case AtomKind::Sphere:
        return sphere(a.first);
    case AtomKind::Grassmannian:
        return grassmannian(a.first, a.second);
    case AtomKind::OrientedGrassmannian:
        return oriented_grassmannian(a.first, a.second);
    }
    throw ContractError("unknown atom kind");
}

inline ManifoldData build_manifold(const ManifoldExpr& e)
{
    if (e.factors.empty())
        throw ContractError("empty manifold expression");
    ManifoldData m = build_atom(e.factors.front());
    for (std::size_t i = 1; i < e.factors.size(); ++i)
        m = product(m, build_atom(e.factors[i]));
    return m;
}

} // namespace skew
