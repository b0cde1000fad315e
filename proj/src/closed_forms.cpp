#include "fuzzytop/closed_forms.hpp"

#include <string>

#include "fuzzytop/errors.hpp"

namespace fuzzytop {

namespace {

BigInt pow_nm(std::int64_t base, int n)
{
    return ipow(BigInt(base), static_cast<std::uint64_t>(n));
}

std::string cell(int n, int m, const BigInt& k)
{
    return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + to_string(k) + ")";
}

} // namespace

std::string_view to_string(FormulaSource s) noexcept
{
    switch (s) {
    case FormulaSource::trivial_k2: return "trivial-k2";
    case FormulaSource::formula_k3: return "formula-k3";
    case FormulaSource::formula_k4: return "formula-k4";
    case FormulaSource::formula_k5: return "formula-k5";
    case FormulaSource::gap_zero: return "gap-zero";
    case FormulaSource::maximal_card: return "maximal-card";
    case FormulaSource::discrete_endpoint: return "discrete-endpoint";
    }
    return "unknown";
}

void check_nm(int n, int m)
{
    if (n < 1) {
        throw InvalidArgs("n must be >= 1, got " + std::to_string(n));
    }
    if (m < 2) {
        throw InvalidArgs("m must be >= 2, got " + std::to_string(m));
    }
}

BigInt count_k2(int n, int m)
{
    check_nm(n, m);
    return 1;
}

BigInt count_k3(int n, int m)
{
    check_nm(n, m);
    return pow_nm(m, n) - 2;
}

BigInt count_k4(int n, int m)
{
    check_nm(n, m);
    const std::int64_t triangular = static_cast<std::int64_t>(m) * (m + 1) / 2;
    return pow_nm(triangular, n) - 3 * pow_nm(m, n) + pow_nm(2, n - 1) + 2;
}

BigInt count_k5(int n, int m)
{
    check_nm(n, m);
    const auto mu = static_cast<std::uint64_t>(m);
    const auto e = static_cast<std::uint64_t>(n);
    return ipow(binomial(mu + 2, 3), e) - 4 * ipow(binomial(mu + 1, 2), e) + pow_nm(2 * m - 1, n) +
           5 * pow_nm(m, n) - pow_nm(m - 1, n) - pow_nm(2, n + 1);
}

FormulaResult maximal_results(int n, int m, const BigInt& k)
{
    check_nm(n, m);
    if (n < m) {
        throw HypothesisNotMet("maximal-cardinality counts are stated for n >= m >= 2 only; got " + cell(n, m, k) +
                               ", use enumeration");
    }
    const BigInt size = pow_nm(m, n);
    const BigInt maximal = size - pow_nm(m, n - 2);
    if (k < maximal || k > size) {
        throw InvalidArgs("k outside [m^n - m^(n-2), m^n] for " + cell(n, m, k));
    }
    if (k == size) {
        return {1, FormulaSource::discrete_endpoint, true};
    }
    if (k == maximal) {
        return {BigInt(n) * (n - 1), FormulaSource::maximal_card, true};
    }
    return {0, FormulaSource::gap_zero, true};
}

std::optional<FormulaResult> try_closed_form(int n, int m, const BigInt& k)
{
    check_nm(n, m);
    if (k < 2) {
        throw InvalidArgs("k must be >= 2, got " + to_string(k));
    }
    if (k == 2) {
        return FormulaResult{count_k2(n, m), FormulaSource::trivial_k2};
    }
    if (k == 3) {
        return FormulaResult{count_k3(n, m), FormulaSource::formula_k3};
    }
    if (k == 4) {
        return FormulaResult{count_k4(n, m), FormulaSource::formula_k4};
    }
    if (k == 5) {
        return FormulaResult{count_k5(n, m), FormulaSource::formula_k5};
    }
    const BigInt size = pow_nm(m, n);
    if (k > size) {
        throw InvalidArgs("k exceeds m^n for " + cell(n, m, k));
    }
    if (k == size) {
        return FormulaResult{1, FormulaSource::discrete_endpoint};
    }
    if (n >= m && k >= size - pow_nm(m, n - 2)) {
        return maximal_results(n, m, k);
    }
    return std::nullopt;
}

FormulaResult closed_form(int n, int m, const BigInt& k)
{
    auto r = try_closed_form(n, m, k);
    if (!r) {
        throw NotCovered("no closed form covers " + cell(n, m, k) + "; use enumeration");
    }
    return *std::move(r);
}

} // namespace fuzzytop
