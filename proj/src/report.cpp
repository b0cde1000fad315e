#include "fuzzytop/report.hpp"

#include <charconv>
#include <chrono>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "fuzzytop/bitopology.hpp"
#include "fuzzytop/errors.hpp"

namespace fuzzytop {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t parse_int(std::string_view s, const std::string& whole)
{
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end) {
        throw InvalidArgs("bad range '" + whole + "', expected A..B or A");
    }
    return v;
}

// m^n clamped to `cap` + 1 so loops over k stay in 64 bits.
std::uint64_t lattice_size_clamped(int n, int m, std::uint64_t cap)
{
    const BigInt size = ipow(BigInt(m), static_cast<std::uint64_t>(n));
    return size > cap ? cap + 1 : size.convert_to<std::uint64_t>();
}

std::optional<std::uint64_t> try_enumerate(int n, int m, std::uint64_t k, const EnumBudget& budget)
{
    try {
        const LatticeContext ctx(n, m);
        return enumerate_topologies(ctx, k, budget);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    } catch (const InvalidK&) {
        throw;
    } catch (const InvalidArgs&) {
        // m^n does not even fit a code.
        return std::nullopt;
    }
}

ojson big_json(const BigInt& v)
{
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
        return v.convert_to<std::uint64_t>();
    }
    if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

template <typename T>
ojson opt_json(const std::optional<T>& v)
{
    if (!v) {
        return nullptr;
    }
    if constexpr (std::is_same_v<T, BigInt>) {
        return big_json(*v);
    } else {
        return *v;
    }
}

std::string opt_text(const std::optional<BigInt>& v)
{
    return v ? v->str() : std::string();
}

std::string opt_text(const std::optional<std::uint64_t>& v)
{
    return v ? std::to_string(*v) : std::string();
}

std::string_view status_text(CellStatus s)
{
    switch (s) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "MISMATCH";
    case CellStatus::skipped: return "skipped";
    }
    return "";
}

} // namespace

IntRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text, text);
    } else {
        r.lo = parse_int(std::string_view(text).substr(0, dots), text);
        r.hi = parse_int(std::string_view(text).substr(dots + 2), text);
    }
    if (r.empty()) {
        throw InvalidArgs("empty range '" + text + "'");
    }
    return r;
}

CellStatus VerifyRow::status() const noexcept
{
    if (!formula || !enumeration) {
        return CellStatus::skipped;
    }
    return match ? CellStatus::match : CellStatus::mismatch;
}

VerificationReport verify(int max_n, int max_m, std::uint64_t max_k, const EnumBudget& budget)
{
    if (max_n < 1 || max_m < 2 || max_k < 2) {
        throw InvalidArgs("verify needs max-n >= 1, max-m >= 2, max-k >= 2");
    }
    if (budget.max_candidates == 0 || budget.max_lattice_size == 0) {
        throw InvalidArgs("enumeration budget must be positive");
    }
    VerificationReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 2; m <= max_m; ++m) {
            const std::uint64_t k_hi = std::min(max_k, lattice_size_clamped(n, m, max_k));
            for (std::uint64_t k = 2; k <= k_hi; ++k) {
                VerifyRow row;
                row.n = n;
                row.m = m;
                row.k = k;
                if (auto f = try_closed_form(n, m, BigInt(k))) {
                    row.formula = f->value;
                    row.source = f->source;
                }
                const auto t0 = std::chrono::steady_clock::now();
                row.enumeration = try_enumerate(n, m, k, budget);
                row.elapsed_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                if (!row.formula) {
                    row.note = "not-covered";
                } else if (!row.enumeration) {
                    row.note = "over-budget";
                }
                row.match = row.formula && row.enumeration && *row.formula == *row.enumeration;
                switch (row.status()) {
                case CellStatus::match: ++report.summary.matches; break;
                case CellStatus::mismatch: ++report.summary.mismatches; break;
                case CellStatus::skipped: ++report.summary.skipped; break;
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

void write_verify_text(std::ostream& os, const VerificationReport& r, bool timing)
{
    os << "n m k formula source enumeration status";
    if (timing) {
        os << " ms";
    }
    os << '\n';
    for (const auto& row : r.rows) {
        os << row.n << ' ' << row.m << ' ' << row.k << ' ' << (row.formula ? row.formula->str() : "-") << ' '
           << (row.source ? to_string(*row.source) : "-") << ' '
           << (row.enumeration ? std::to_string(*row.enumeration) : "-") << ' ' << status_text(row.status());
        if (!row.note.empty()) {
            os << " (" << row.note << ')';
        }
        if (timing) {
            os << ' ' << row.elapsed_ms;
        }
        os << '\n';
    }
    os << "matches=" << r.summary.matches << " mismatches=" << r.summary.mismatches
       << " skipped=" << r.summary.skipped << '\n';
}

void write_verify_json(std::ostream& os, const VerificationReport& r, bool timing)
{
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson j;
        j["n"] = row.n;
        j["m"] = row.m;
        j["k"] = row.k;
        j["formula"] = opt_json(row.formula);
        j["source"] = row.source ? ojson(std::string(to_string(*row.source))) : ojson(nullptr);
        j["enumeration"] = opt_json(row.enumeration);
        j["match"] = row.match;
        j["status"] = std::string(status_text(row.status()));
        if (!row.note.empty()) {
            j["note"] = row.note;
        }
        if (timing) {
            j["elapsed_ms"] = row.elapsed_ms;
        }
        rows.push_back(std::move(j));
    }
    ojson doc;
    doc["rows"] = std::move(rows);
    doc["summary"] = {{"matches", r.summary.matches},
                      {"mismatches", r.summary.mismatches},
                      {"skipped", r.summary.skipped}};
    os << doc.dump(2) << '\n';
}

std::vector<TableRow> build_table(IntRange n_range, IntRange m_range, IntRange k_range, bool with_formula,
                                  bool with_enumeration, const EnumBudget& budget)
{
    if (n_range.empty() || m_range.empty() || k_range.empty() || n_range.lo < 1 || m_range.lo < 2 ||
        n_range.hi > 64 || m_range.hi > 65536) {
        throw InvalidArgs("table ranges need n >= 1 and m >= 2");
    }
    std::vector<TableRow> rows;
    const auto k_lo = static_cast<std::uint64_t>(std::max<std::int64_t>(k_range.lo, 2));
    for (auto n = n_range.lo; n <= n_range.hi; ++n) {
        for (auto m = m_range.lo; m <= m_range.hi; ++m) {
            if (k_range.hi < 2) {
                continue;
            }
            const auto k_cap = static_cast<std::uint64_t>(k_range.hi);
            const std::uint64_t k_hi =
                std::min(k_cap, lattice_size_clamped(static_cast<int>(n), static_cast<int>(m), k_cap));
            for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
                TableRow row;
                row.n = static_cast<int>(n);
                row.m = static_cast<int>(m);
                row.k = k;
                if (with_formula) {
                    if (auto f = try_closed_form(row.n, row.m, BigInt(k))) {
                        row.formula = f->value;
                    }
                }
                if (with_enumeration) {
                    row.enumeration = try_enumerate(row.n, row.m, k, budget);
                }
                if (row.enumeration) {
                    row.bitop_paper = pair_count_from_T(BigInt(*row.enumeration), PairConvention::paper);
                } else if (row.formula && *row.formula >= 0) {
                    row.bitop_paper = pair_count_from_T(*row.formula, PairConvention::paper);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows)
{
    os << kTableCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << r.m << ',' << r.k << ',' << opt_text(r.formula) << ',' << opt_text(r.enumeration) << ','
           << opt_text(r.bitop_paper) << '\n';
    }
}

void write_table_json(std::ostream& os, const std::vector<TableRow>& rows)
{
    ojson doc = ojson::array();
    for (const auto& r : rows) {
        ojson j;
        j["n"] = r.n;
        j["m"] = r.m;
        j["k"] = r.k;
        j["formula"] = opt_json(r.formula);
        j["enumeration"] = opt_json(r.enumeration);
        j["bitop_paper"] = opt_json(r.bitop_paper);
        doc.push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
}

std::string format_grade(Grade g, int m, bool rational)
{
    if (!rational) {
        return std::to_string(g);
    }
    const auto den = static_cast<Grade>(m - 1);
    if (g == 0) {
        return "0";
    }
    const Grade d = std::gcd(g, den);
    if (den / d == 1) {
        return std::to_string(g / d);
    }
    return std::to_string(g / d) + "/" + std::to_string(den / d);
}

std::string format_family(const TopologyFamily& f, bool rational)
{
    std::string out = "{";
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += '[';
        const GradeVector g = decode(f.members[i], f.ctx);
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (j != 0) {
                out += ',';
            }
            out += format_grade(g[j], f.ctx.m(), rational);
        }
        out += ']';
    }
    out += '}';
    return out;
}

std::string family_json(const TopologyFamily& f, bool rational)
{
    ojson fam = ojson::array();
    for (Code c : f.members) {
        ojson vec = ojson::array();
        for (Grade g : decode(c, f.ctx)) {
            if (rational) {
                vec.push_back(format_grade(g, f.ctx.m(), true));
            } else {
                vec.push_back(g);
            }
        }
        fam.push_back(std::move(vec));
    }
    return fam.dump();
}

} // namespace fuzzytop
