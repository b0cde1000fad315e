#include "fuzzytop/bitopology.hpp"

#include <string>

#include "fuzzytop/errors.hpp"

namespace fuzzytop {

std::string_view to_string(PairConvention c) noexcept
{
    switch (c) {
    case PairConvention::paper: return "paper";
    case PairConvention::ordered: return "ordered";
    case PairConvention::distinct: return "distinct";
    }
    return "unknown";
}

std::string_view to_string(CountMethod m) noexcept
{
    return m == CountMethod::formula ? "formula" : "enumeration";
}

std::optional<PairConvention> parse_convention(std::string_view s) noexcept
{
    if (s == "paper") {
        return PairConvention::paper;
    }
    if (s == "ordered") {
        return PairConvention::ordered;
    }
    if (s == "distinct") {
        return PairConvention::distinct;
    }
    return std::nullopt;
}

BigInt pair_count_from_T(const BigInt& t, PairConvention conv)
{
    if (t < 0) {
        throw InvalidArgs("topology count must be non-negative");
    }
    switch (conv) {
    case PairConvention::paper: return t * (t + 1) / 2;
    case PairConvention::ordered: return t * t;
    case PairConvention::distinct: return t == 0 ? BigInt(0) : t * (t - 1) / 2;
    }
    return 0;
}

BitopCountResult bitop_count(int n, int m, std::uint64_t k, PairConvention conv, CountMethod method,
                             const EnumBudget& budget)
{
    check_nm(n, m);
    BitopCountResult r{0, 0, conv, method, std::nullopt};
    if (method == CountMethod::formula) {
        const FormulaResult f = closed_form(n, m, BigInt(k));
        r.topology_count = f.value;
        r.source = f.source;
    } else {
        const LatticeContext ctx(n, m);
        r.topology_count = enumerate_topologies(ctx, k, budget);
    }
    r.pair_count = pair_count_from_T(r.topology_count, conv);
    return r;
}

std::uint64_t enumerate_pairs(const LatticeContext& ctx, std::uint64_t k, PairConvention conv,
                              const EnumBudget& budget, const PairSink& sink)
{
    const std::vector<TopologyFamily> families = list_topologies(ctx, k, budget);
    const BigInt t = families.size();
    if (t * t > budget.max_candidates) {
        throw BudgetExceeded(to_string(t * t) + " ordered pairs exceeds budget " +
                             std::to_string(budget.max_candidates));
    }
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < families.size(); ++i) {
        const std::size_t j0 = conv == PairConvention::ordered ? 0 : conv == PairConvention::paper ? i : i + 1;
        for (std::size_t j = j0; j < families.size(); ++j) {
            ++count;
            if (sink) {
                sink(families[i], families[j]);
            }
        }
    }
    return count;
}

} // namespace fuzzytop
