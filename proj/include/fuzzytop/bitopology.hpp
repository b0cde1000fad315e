#pragma once

// Fuzzy bitopological spaces (X, t1, t2) with |t1| = |t2| = k.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "fuzzytop/bigint.hpp"
#include "fuzzytop/closed_forms.hpp"
#include "fuzzytop/topology.hpp"

namespace fuzzytop {

/// How the two topologies of a bitopological space are paired.
enum class PairConvention {
    paper,    ///< unordered, t1 = t2 allowed: T(T+1)/2
    ordered,  ///< ordered pairs: T^2
    distinct, ///< unordered, t1 != t2: T(T-1)/2
};

enum class CountMethod { formula, enumerate };

std::string_view to_string(PairConvention c) noexcept;
std::string_view to_string(CountMethod m) noexcept;
std::optional<PairConvention> parse_convention(std::string_view s) noexcept;

struct BitopCountResult {
    BigInt topology_count;
    BigInt pair_count;
    PairConvention convention;
    CountMethod method;
    /// Set when the topology count came from a closed form.
    std::optional<FormulaSource> source;
};

BigInt pair_count_from_T(const BigInt& topology_count, PairConvention conv);

/// Topology count by `method`, then the pair count under `conv`.
/// Throws NotCovered (formula), BudgetExceeded (enumerate), InvalidArgs.
BitopCountResult bitop_count(int n, int m, std::uint64_t k, PairConvention conv, CountMethod method,
                             const EnumBudget& budget = {});

using PairSink = std::function<void(const TopologyFamily&, const TopologyFamily&)>;

/// Walks every admissible pair of k-topologies and returns how many there
/// are. Unordered conventions emit the lexicographically smaller family
/// first. The number of pairs visited is capped by budget.max_candidates.
std::uint64_t enumerate_pairs(const LatticeContext& ctx, std::uint64_t k, PairConvention conv,
                              const EnumBudget& budget = {}, const PairSink& sink = {});

} // namespace fuzzytop
