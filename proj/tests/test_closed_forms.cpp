#include <doctest.h>

#include "fuzzytop/closed_forms.hpp"
#include "fuzzytop/errors.hpp"
#include "fuzzytop/topology.hpp"
#include "oracle.hpp"

using namespace fuzzytop;

namespace {

std::uint64_t enumerated(int n, int m, std::uint64_t k)
{
    const LatticeContext ctx(n, m);
    if (oracle::choose_sat(ctx.size() - 2, k - 2) <= 1'000'000) {
        return oracle::naive_count(n, m, k);
    }
    return enumerate_topologies(ctx, k);
}

BigInt formula_for(int n, int m, int k)
{
    switch (k) {
    case 2: return count_k2(n, m);
    case 3: return count_k3(n, m);
    case 4: return count_k4(n, m);
    default: return count_k5(n, m);
    }
}

} // namespace

TEST_CASE("k = 2")
{
    CHECK(count_k2(1, 2) == 1);
    CHECK(count_k2(5, 7) == 1);
    CHECK(count_k2(2, 3) == oracle::naive_count(2, 3, 2));
}

TEST_CASE("k = 3")
{
    CHECK(count_k3(2, 3) == 7);
    CHECK(count_k3(1, 2) == 0);
    CHECK(count_k3(3, 2) == 6);
    CHECK(count_k3(3, 2) == oracle::naive_count(3, 2, 3));
    CHECK(count_k3(12, 12) == BigInt("8916100448254"));
}

TEST_CASE("k = 4")
{
    CHECK(count_k4(2, 3) == 13);
    CHECK(count_k4(2, 2) == 1);
    CHECK(oracle::naive_count(2, 2, 4) == 1);
    CHECK(count_k4(1, 5) == 3);
    CHECK(oracle::naive_count(1, 5, 4) == 3);
    CHECK(count_k4(20, 12) == BigInt("69485158708621539959526455513473089538"));
}

TEST_CASE("k = 5")
{
    // value of the closed form as displayed
    CHECK(count_k5(2, 3) == 14);
    // A 4-chain has only 4 fuzzy subsets, so nothing has 5 open sets.
    CHECK(count_k5(1, 4) == 0);
    CHECK(count_k5(2, 2) == 0);
    CHECK(count_k5(20, 12) == BigInt("1667353451917210031091246130535472309157364805921200"));
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(count_k2(0, 2), InvalidArgs);
    CHECK_THROWS_AS(count_k3(1, 1), InvalidArgs);
    CHECK_THROWS_AS(count_k4(-1, 3), InvalidArgs);
    CHECK_THROWS_AS(count_k5(2, 0), InvalidArgs);
    CHECK_THROWS_AS(try_closed_form(2, 3, 1), InvalidArgs);
    CHECK_THROWS_AS(try_closed_form(2, 3, 10), InvalidArgs);
}

TEST_CASE("maximal cardinality results")
{
    auto r = maximal_results(3, 2, 6);
    CHECK(r.value == 6);
    CHECK(r.source == FormulaSource::maximal_card);
    CHECK(r.hypotheses_met);

    r = maximal_results(3, 2, 7);
    CHECK(r.value == 0);
    CHECK(r.source == FormulaSource::gap_zero);

    r = maximal_results(3, 2, 8);
    CHECK(r.value == 1);
    CHECK(r.source == FormulaSource::discrete_endpoint);

    r = maximal_results(2, 2, 3);
    CHECK(r.value == 2);
    CHECK(r.value == count_k3(2, 2));

    CHECK_THROWS_AS(maximal_results(2, 3, 8), HypothesisNotMet);
    CHECK_THROWS_AS(maximal_results(3, 2, 5), InvalidArgs);
    CHECK_THROWS_AS(maximal_results(3, 2, 9), InvalidArgs);
    CHECK(maximal_results(12, 12, ipow(12, 12) - ipow(12, 10)).value == 132);
}

TEST_CASE("closed form dispatch")
{
    CHECK(closed_form(2, 3, 4).source == FormulaSource::formula_k4);
    CHECK(closed_form(3, 2, 6).source == FormulaSource::maximal_card);
    CHECK(closed_form(3, 2, 7).source == FormulaSource::gap_zero);
    CHECK(closed_form(2, 3, 9).source == FormulaSource::discrete_endpoint);
    // k = 3 = m^n - m^(n-2) at (2, 2): the k = 3 formula wins and agrees
    CHECK(closed_form(2, 2, 3).source == FormulaSource::formula_k3);
    // k = 5 formula applies even past m^n, where it evaluates to zero
    CHECK(closed_form(1, 3, 5).value == 0);

    CHECK_FALSE(try_closed_form(3, 3, 6).has_value());
    CHECK_THROWS_AS(closed_form(3, 3, 6), NotCovered);
    // n < m: no theorem-backed value just below the top
    CHECK_FALSE(try_closed_form(2, 3, 8).has_value());
    CHECK(to_string(FormulaSource::formula_k5) == "formula-k5");
}

TEST_CASE("k <= 4 formulas match enumeration on every lattice with m^n <= 81")
{
    for (auto [n, m] : oracle::contexts_up_to(81)) {
        const auto size = LatticeContext(n, m).size();
        for (int k = 2; k <= 4; ++k) {
            if (static_cast<std::uint64_t>(k) > size) {
                REQUIRE(formula_for(n, m, k) == 0);
                continue;
            }
            REQUIRE_MESSAGE(formula_for(n, m, k) == enumerated(n, m, static_cast<std::uint64_t>(k)),
                            "n=" << n << " m=" << m << " k=" << k);
        }
    }
}

TEST_CASE("k = 5 formula matches enumeration on chains and crisp lattices")
{
    for (auto [n, m] : oracle::contexts_up_to(81)) {
        if (n != 1 && m != 2) {
            continue;
        }
        const auto size = LatticeContext(n, m).size();
        if (size < 5) {
            REQUIRE(count_k5(n, m) == 0);
            continue;
        }
        REQUIRE_MESSAGE(count_k5(n, m) == enumerated(n, m, 5), "n=" << n << " m=" << m);
    }
}

TEST_CASE("k = 5 formula overcounts once n >= 2 and m >= 3")
{
    // enumerated values from the brute-force oracle
    struct Cell {
        int n, m;
        std::uint64_t enumerated;
        int formula;
    };
    const Cell cells[] = {
        {2, 3, 12, 14},    {2, 4, 108, 112},   {2, 5, 501, 507},    {2, 6, 1632, 1640},
        {2, 7, 4280, 4290}, {2, 8, 9692, 9704}, {2, 9, 19733, 19747}, {3, 3, 360, 372},
        {3, 4, 4590, 4620}, {4, 3, 5748, 5798},
    };
    for (const auto& c : cells) {
        CHECK(count_k5(c.n, c.m) == c.formula);
        CHECK(enumerated(c.n, c.m, 5) == c.enumerated);
    }
    for (auto [n, m] : oracle::contexts_up_to(81)) {
        if (n >= 2 && m >= 3) {
            CHECK(count_k5(n, m) > enumerated(n, m, 5));
        }
    }
}

TEST_CASE("chain specialization")
{
    for (int m = 2; m <= 12; ++m) {
        for (int k = 3; k <= 5; ++k) {
            const BigInt expected = oracle::choose_sat(static_cast<std::uint64_t>(m - 2), static_cast<std::uint64_t>(k - 2));
            REQUIRE(formula_for(1, m, k) == expected);
        }
    }
}

TEST_CASE("crisp specialization: census totals")
{
    const auto total = [](int n) {
        std::uint64_t sum = 0;
        for (auto [k, c] : enumerate_all_sizes(LatticeContext(n, 2))) {
            sum += c;
        }
        return sum;
    };
    CHECK(total(2) == 4);
    CHECK(total(3) == 29);
}

TEST_CASE("formulas are non-negative for n, m <= 12")
{
    for (int n = 1; n <= 12; ++n) {
        for (int m = 2; m <= 12; ++m) {
            for (int k = 2; k <= 5; ++k) {
                REQUIRE(formula_for(n, m, k) >= 0);
            }
        }
    }
}
