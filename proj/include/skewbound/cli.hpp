#pragma once

// Command implementations behind the `skewbound` tool. Each command writes to
// the given streams and returns the process exit status.

#include "skewbound/bound.hpp"
#include "skewbound/catalog.hpp"
#include "skewbound/expr.hpp"
#include "skewbound/oracle.hpp"
#include "skewbound/steenrod.hpp"

#include <nlohmann/json.hpp>

#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitRegressionFail = 3;

using ordered_json = nlohmann::ordered_json;

inline ordered_json report_json(const BoundReport& r)
{
    ordered_json j;
    j["label"] = r.label;
    j["dimension"] = r.dimension;
    j["alpha"] = r.alpha;
    j["kmax"] = r.kmax;
    j["witness"] = r.witness_text;
    j["lower_bound"] = r.lower_bound;
    j["generic_lower"] = r.generic_lower;
    j["massey_cap"] = r.massey_cap;
    j["conjectured_upper"] = r.conjectured_upper;
    j["literature_upper"] = r.literature_upper;
    j["source_of_best_lower"] = r.source_of_best_lower();
    return j;
}

inline void render_text(std::ostream& out, const BoundReport& r)
{
    auto row = [&](std::string_view key, const std::string& value, std::string_view note = {}) {
        out << std::left << std::setw(20) << key << std::setw(8) << value;
        if (!note.empty())
            out << "  " << note;
        out << '\n';
    };
    row("manifold", r.label);
    row("dimension", std::to_string(r.dimension));
    row("alpha", std::to_string(r.alpha), "binary digit sum of n");
    row("kmax", std::to_string(r.kmax), "top non-zero dual class degree");
    row("witness", r.witness_text);
    row("lower_bound", std::to_string(r.lower_bound), "2n + 2kmax + 1");
    row("generic_lower", std::to_string(r.generic_lower), "2n + 2 for closed manifolds");
    row("best_lower", std::to_string(r.best_lower()), r.source_of_best_lower());
    row("massey_cap", std::to_string(r.massey_cap), "n - alpha(n)");
    row("conjectured_upper", std::to_string(r.conjectured_upper), "4n - 2alpha(n) + 1, conjectural");
    row("literature_upper", std::to_string(r.literature_upper), "4n + 1");
}

inline void report_parse_error(std::ostream& err, std::string_view text, const ParseError& e)
{
    err << "parse error at offset " << e.offset() << ": " << e.what() << '\n';
    err << "  " << text << '\n';
    err << "  " << std::string(e.offset(), ' ') << "^\n";
    if (!e.expected().empty()) {
        err << "  expected one of:";
        for (const auto& t : e.expected())
            err << ' ' << t;
        err << '\n';
    }
}

struct ComputeOptions {
    bool json = false;
    bool classes = false;
    bool steenrod = false;
};

struct ClassListing {
    int degree = 0;
    Poly value;
    Poly sq1;
    Poly sq2;
};

inline std::vector<ClassListing> list_dual_classes(const ManifoldData& m, bool with_steenrod)
{
    const QuotientRing ring = detection_ring(m);
    const GradedSeries dual = dual_class(m);
    std::vector<ClassListing> out;
    for (int d = 1; d <= m.dimension; ++d) {
        Poly c = ring.normal_form(dual.component(d));
        if (c.is_zero())
            continue;
        ClassListing item{d, c, Poly(ring.table()), Poly(ring.table())};
        if (with_steenrod) {
            item.sq1 = sq(1, c, ring);
            item.sq2 = sq(2, c, ring);
        }
        out.push_back(std::move(item));
    }
    return out;
}

inline int cmd_compute(std::string_view text, const ComputeOptions& opts, std::ostream& out, std::ostream& err)
{
    ManifoldExpr expr;
    try {
        expr = parse_expr(text);
    }
    catch (const ParseError& e) {
        report_parse_error(err, text, e);
        return kExitParseError;
    }
    try {
        const ManifoldData m = build_manifold(expr);
        const BoundReport r = bound(m);
        const bool list = opts.classes || opts.steenrod;
        std::vector<ClassListing> classes;
        if (list)
            classes = list_dual_classes(m, opts.steenrod);
        if (opts.json) {
            ordered_json j = report_json(r);
            if (list) {
                ordered_json arr = ordered_json::array();
                for (const auto& c : classes) {
                    ordered_json item;
                    item["degree"] = c.degree;
                    item["class"] = to_string(c.value);
                    if (opts.steenrod) {
                        item["sq1"] = to_string(c.sq1);
                        item["sq2"] = to_string(c.sq2);
                    }
                    arr.push_back(std::move(item));
                }
                j["classes"] = std::move(arr);
            }
            out << j.dump() << '\n';
        }
        else {
            render_text(out, r);
            if (list) {
                out << "\ndual classes (normal form" << (m.oriented() ? ", modulo ker p*" : "") << "):\n";
                for (const auto& c : classes) {
                    out << "  wbar_" << c.degree << " = " << to_string(c.value) << '\n';
                    if (opts.steenrod) {
                        out << "    Sq^1 = " << to_string(c.sq1) << '\n';
                        out << "    Sq^2 = " << to_string(c.sq2) << '\n';
                    }
                }
            }
        }
        return kExitOk;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

struct ReferenceRow {
    std::string expr;
    int expected = 0;
    std::string source;
};

/// Every lower bound the reference results state, with the statement it comes from.
inline const std::vector<ReferenceRow>& reference_rows()
{
    static const std::vector<ReferenceRow> rows{
        {"RP(2)", 7, "RP^n, n = 2^r: N >= 4n - 1"},
        {"RP(4)", 15, "RP^n, n = 2^r: N >= 4n - 1"},
        {"RP(8)", 31, "RP^n, n = 2^r: N >= 4n - 1"},
        {"RP(16)", 63, "RP^n, n = 2^r: N >= 4n - 1"},
        {"RP(1)xRP(2)xRP(4)", 23, "products of RP^(2^r): N >= 4n - 2alpha(n) + 1"},
        {"RP(2)xRP(4)", 21, "products of RP^(2^r): N >= 4n - 2alpha(n) + 1"},
        {"CP(1)", 5, "CP^n, n = 2^r: N >= 4 dim - 3"},
        {"CP(2)", 13, "CP^n, n = 2^r: N >= 4 dim - 3"},
        {"CP(4)", 29, "CP^n, n = 2^r: N >= 4 dim - 3"},
        {"CP(1)xCP(2)xCP(4)", 45, "products of CP^(2^r): N >= 8n - 4alpha(n) + 1"},
        {"G(2,4)", 13, "G_2(R^(2^r+2)): N >= 4 2^(r+1) - 3, r = 1"},
        {"G(2,6)", 29, "G_2(R^(2^r+2)): N >= 4 2^(r+1) - 3, r = 2"},
        {"G(2,5)", 21, "G_2(R^5) >= 21"},
        {"G(2,7)", 29, "G_2(R^7) >= 29"},
        {"G(3,6)", 31, "G_3(R^6) >= 31"},
        {"G(3,8)", 43, "G_3(R^8) >= 43"},
        {"G(3,7)", 43, "G_3(R^7) >= 43"},
        {"G~(2,4)", 13, "oriented G_2(R^(2^r+2)): N >= 3 2^(r+1) + 1, r = 1"},
        {"G~(2,6)", 25, "oriented G_2(R^(2^r+2)): N >= 3 2^(r+1) + 1, r = 2"},
        {"G~(2,5)", 17, "oriented G_2(R^(2^r+1)): N >= 3 2^(r+1) - 7, r = 2"},
        {"G~(2,7)", 29, "oriented G_2(R^(2^r+3)): N >= 3 2^(r+1) + 5, r = 2"},
        {"G~(2,8)", 33, "oriented G_2(R^(2^r+4)): N >= 3 2^(r+1) + 9, r = 2"},
        {"G~(3,7)", 41, "oriented G_3(R^7) >= 41"},
        {"G~(3,13)", 89, "oriented G_3(R^13) >= 89"},
    };
    return rows;
}

struct ReferenceRowResult {
    ReferenceRow row;
    BoundReport report;
    bool pass = false;
};

/// Computes every reference row; rows run concurrently and come back in table order.
inline std::vector<ReferenceRowResult> run_reference_table()
{
    std::vector<std::future<ReferenceRowResult>> jobs;
    for (const auto& row : reference_rows()) {
        jobs.push_back(std::async(std::launch::async, [row] {
            ReferenceRowResult res{row, bound(build_manifold(parse_expr(row.expr))), false};
            res.pass = res.report.lower_bound == row.expected;
            return res;
        }));
    }
    std::vector<ReferenceRowResult> results;
    for (auto& j : jobs)
        results.push_back(j.get());
    return results;
}

inline int cmd_paper_table(bool json, std::ostream& out, std::ostream& err)
{
    std::vector<ReferenceRowResult> results;
    try {
        results = run_reference_table();
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass)
            ++failures;
        if (json) {
            ordered_json j = report_json(r.report);
            j["expected"] = r.row.expected;
            j["status"] = r.pass ? "PASS" : "FAIL";
            out << j.dump() << '\n';
        }
        else {
            out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << r.row.expr << " expected "
                << std::right << std::setw(3) << r.row.expected << "  computed " << std::setw(3)
                << r.report.lower_bound << "  (n=" << r.report.dimension << ", kmax=" << r.report.kmax << ")  "
                << r.row.source << '\n';
        }
    }
    if (!json)
        out << (results.size() - static_cast<std::size_t>(failures)) << "/" << results.size() << " rows PASS\n";
    return failures == 0 ? kExitOk : kExitRegressionFail;
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Oracle cross-checks for the ring of one manifold.
inline std::vector<VerifyCheck> verify_manifold(const ManifoldData& m, std::uint64_t seed = 0x5eedULL)
{
    std::vector<VerifyCheck> checks;
    const QuotientRing& ring = *m.ring;
    const RingPresentation& pres = ring.presentation();
    const int top = ring.top_dimension();

    {
        VerifyCheck c{"basis-count-vs-slice-rank", true, ""};
        for (int d = 0; d <= top && c.pass; ++d) {
            const auto slice = build_slice(pres, d);
            if (slice.quotient_dimension() != ring.degree_basis(d).size()) {
                c.pass = false;
                c.detail = "degree " + std::to_string(d) + ": basis " + std::to_string(ring.degree_basis(d).size()) +
                           " vs slice " + std::to_string(slice.quotient_dimension());
            }
        }
        if (c.pass)
            c.detail = "degrees 0.." + std::to_string(top);
        checks.push_back(c);
    }
    {
        VerifyCheck c{"normal-form-vs-slice-zero-test", true, ""};
        std::mt19937_64 rng(seed);
        int zeros = 0;
        const int samples = 200;
        for (int s = 0; s < samples && c.pass; ++s) {
            const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(top + 1));
            Poly p = random_mixed_element(pres, d, rng);
            const bool gb_zero = ring.is_zero(p);
            zeros += gb_zero;
            if (gb_zero != slice_zero_test(pres, p)) {
                c.pass = false;
                c.detail = "disagreement on " + to_string(p);
            }
        }
        if (c.pass)
            c.detail = std::to_string(samples) + " samples, " + std::to_string(zeros) + " zero";
        checks.push_back(c);
    }
    if (m.oriented()) {
        VerifyCheck c{"kernel-membership-vs-slice", true, ""};
        const QuotientRing ext = detection_ring(m);
        int count = 0;
        for (int d = 0; d <= std::min(top, 15) && c.pass; ++d) {
            const auto slice = build_slice(pres, d, *m.oriented_kernel);
            for (const auto& mono : monomials_of_degree(*ring.table(), d)) {
                Poly p = Poly::monomial(ring.table(), mono);
                ++count;
                if (ext.is_zero(p) != slice.in_ideal(p)) {
                    c.pass = false;
                    c.detail = "disagreement on " + to_string(p);
                    break;
                }
            }
        }
        if (c.pass)
            c.detail = std::to_string(count) + " monomials";
        checks.push_back(c);
    }
    {
        VerifyCheck c{"relations-vanish", true, ""};
        for (const auto& r : pres.relations)
            if (!ring.is_zero(r)) {
                c.pass = false;
                c.detail = to_string(r);
            }
        checks.push_back(c);
    }
    {
        VerifyCheck c{"poincare-duality", true, ""};
        for (int d = 0; d <= top; ++d)
            if (ring.degree_basis(d).size() != ring.degree_basis(top - d).size()) {
                c.pass = false;
                c.detail = "degree " + std::to_string(d);
            }
        if (ring.degree_basis(top).size() != 1) {
            c.pass = false;
            c.detail = "top degree is not one-dimensional";
        }
        checks.push_back(c);
    }
    const GradedSeries dual = dual_class(m);
    {
        VerifyCheck c{"total-class-times-dual-is-one", ring.multiply(ring.reduce(m.total_sw), dual).is_one(), ""};
        checks.push_back(c);
    }
    {
        const KmaxResult k = kmax(m, dual);
        const int cap = m.dimension - alpha(static_cast<std::uint64_t>(m.dimension));
        checks.push_back({"massey-cap", k.degree <= cap,
                          "kmax " + std::to_string(k.degree) + " <= " + std::to_string(cap)});
    }
    if (m.factor_count == 1 && ring.table()->size() >= 2 && ring.table()->name(0) == "w1") {
        const int k = static_cast<int>(ring.table()->size());
        TablePtr xs = variable_table(k);
        Poly prod = Poly::one(xs);
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j)
                prod = prod * (Poly::one(xs) + Poly::generator(xs, i) + Poly::generator(xs, j));
        checks.push_back({"p_k-round-trip", expand_verify(build_pk(k), SymmetricPoly(prod)), "k = " + std::to_string(k)});
    }
    return checks;
}

inline int cmd_verify(std::string_view text, std::ostream& out, std::ostream& err)
{
    ManifoldExpr expr;
    try {
        expr = parse_expr(text);
    }
    catch (const ParseError& e) {
        report_parse_error(err, text, e);
        return kExitParseError;
    }
    try {
        const ManifoldData m = build_manifold(expr);
        bool all = true;
        for (const auto& c : verify_manifold(m)) {
            all = all && c.pass;
            out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << c.name << c.detail << '\n';
        }
        return all ? kExitOk : kExitRegressionFail;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

} // namespace skew
