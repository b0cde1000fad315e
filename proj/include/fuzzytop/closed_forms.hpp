#pragma once

// Closed-form counts tau_F(n, m, k) of fuzzy topologies with k open sets,
// evaluated in exact integers.

#include <cstdint>
#include <optional>
#include <string_view>

#include "fuzzytop/bigint.hpp"

namespace fuzzytop {

enum class FormulaSource {
    trivial_k2,
    formula_k3,
    formula_k4,
    formula_k5,
    gap_zero,
    maximal_card,
    discrete_endpoint,
};

std::string_view to_string(FormulaSource s) noexcept;

struct FormulaResult {
    BigInt value;
    FormulaSource source;
    /// Side conditions of the result hold (n >= m >= 2 for the maximal
    /// cardinality results; always true for the k <= 5 formulas).
    bool hypotheses_met = true;
};

/// 1: only {0, 1}.
BigInt count_k2(int n, int m);
/// m^n - 2.
BigInt count_k3(int n, int m);
/// (m(m+1)/2)^n - 3 m^n + 2^(n-1) + 2.
BigInt count_k4(int n, int m);
/// C(m+2,3)^n - 4 C(m+1,2)^n + (2m-1)^n + 5 m^n - (m-1)^n - 2^(n+1).
BigInt count_k5(int n, int m);

/// Counts at the top of the cardinality range when n >= m >= 2:
/// n(n-1) at k = m^n - m^(n-2), zero strictly between that and m^n, and
/// one (the discrete topology) at k = m^n.
/// Throws HypothesisNotMet for n < m and InvalidArgs for k outside
/// [m^n - m^(n-2), m^n].
FormulaResult maximal_results(int n, int m, const BigInt& k);

/// Picks the closed form that covers (n, m, k), if any: the k <= 5
/// formulas first, then the discrete endpoint k = m^n, then the maximal
/// cardinality results. Throws InvalidArgs for malformed input.
std::optional<FormulaResult> try_closed_form(int n, int m, const BigInt& k);

/// As try_closed_form, but throws NotCovered when no closed form applies.
FormulaResult closed_form(int n, int m, const BigInt& k);

/// Throws InvalidArgs unless n >= 1 and m >= 2.
void check_nm(int n, int m);

} // namespace fuzzytop
