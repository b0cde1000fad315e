#pragma once

// Verification sweeps and result tables behind the command-line front end.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuzzytop/bigint.hpp"
#include "fuzzytop/closed_forms.hpp"
#include "fuzzytop/topology.hpp"

namespace fuzzytop {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const noexcept { return hi < lo; }
    std::int64_t size() const noexcept { return empty() ? 0 : hi - lo + 1; }
};

/// Parses "A..B" or a single integer "A". Throws InvalidArgs.
IntRange parse_range(const std::string& text);

enum class CellStatus { match, mismatch, skipped };

struct VerifyRow {
    int n = 0;
    int m = 0;
    std::uint64_t k = 0;
    std::optional<BigInt> formula;
    std::optional<FormulaSource> source;
    std::optional<std::uint64_t> enumeration;
    bool match = false;
    double elapsed_ms = 0.0;
    /// Why a cell was skipped ("not-covered", "over-budget"); empty otherwise.
    std::string note;

    CellStatus status() const noexcept;
};

struct VerifySummary {
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t skipped = 0;
};

struct VerificationReport {
    std::vector<VerifyRow> rows;
    VerifySummary summary;

    bool ok() const noexcept { return summary.mismatches == 0; }
};

/// Compares closed forms with enumeration on every (n, m, k) with
/// 1 <= n <= max_n, 2 <= m <= max_m, 2 <= k <= min(max_k, m^n).
/// Over-budget cells and cells without a closed form are skipped.
VerificationReport verify(int max_n, int max_m, std::uint64_t max_k, const EnumBudget& budget = {});

void write_verify_text(std::ostream& os, const VerificationReport& r, bool timing);
void write_verify_json(std::ostream& os, const VerificationReport& r, bool timing);

struct TableRow {
    int n = 0;
    int m = 0;
    std::uint64_t k = 0;
    std::optional<BigInt> formula;
    std::optional<std::uint64_t> enumeration;
    std::optional<BigInt> bitop_paper;
};

inline constexpr const char* kTableCsvHeader = "n,m,k,formula,enumeration,bitop_paper";

/// Rows ordered by n, then m, then k; k restricted to [2, m^n]. The
/// bitop_paper column is T(T+1)/2 of the enumerated count when available,
/// otherwise of the formula value. Over-budget enumeration cells stay empty.
std::vector<TableRow> build_table(IntRange n_range, IntRange m_range, IntRange k_range, bool with_formula,
                                  bool with_enumeration, const EnumBudget& budget = {});

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);
void write_table_json(std::ostream& os, const std::vector<TableRow>& rows);

/// Grade rank as text: the rank itself, or the reduced fraction
/// rank/(m-1) when `rational` is set.
std::string format_grade(Grade g, int m, bool rational);

/// "{[0,0],[0,1],[2,2]}"
std::string format_family(const TopologyFamily& f, bool rational);

/// One JSON array per family, grade vectors as arrays.
std::string family_json(const TopologyFamily& f, bool rational);

} // namespace fuzzytop
