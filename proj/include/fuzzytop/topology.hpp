#pragma once

// Fuzzy topologies on a finite lattice M^X: the validity check, the
// closure operator and exhaustive enumeration by open-set count.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fuzzytop/lattice.hpp"

namespace fuzzytop {

/// A family of fuzzy subsets, members strictly increasing by code.
struct TopologyFamily {
    LatticeContext ctx;
    std::vector<Code> members;

    std::size_t size() const noexcept { return members.size(); }

    friend bool operator==(const TopologyFamily&, const TopologyFamily&) = default;
};

/// Caps that keep brute force at desk scale.
struct EnumBudget {
    /// Upper bound on C(m^n - 2, k - 2), the number of candidate families.
    std::uint64_t max_candidates = 100'000'000;
    /// Upper bound on m^n.
    std::uint64_t max_lattice_size = 4096;
};

using FamilySink = std::function<void(const TopologyFamily&)>;

/// True iff the family holds 0 and 1 and is closed under pairwise meet
/// and join. Duplicate codes are ignored.
bool is_topology(std::span<const Code> members, const LatticeContext& ctx);

/// Smallest topology containing `seed`.
TopologyFamily closure(std::span<const Code> seed, const LatticeContext& ctx);

/// Throws InvalidK / BudgetExceeded if (ctx, k) cannot be enumerated.
void check_enumerable(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget);

/// Number of k-element fuzzy topologies. Families go to `sink` (if any)
/// once each, in lexicographic order of their member lists. Work is split
/// across OpenMP threads by the smallest proper member; the result and the
/// emission order do not depend on the thread count.
std::uint64_t enumerate_topologies(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget = {},
                                   const FamilySink& sink = {});

/// Single-threaded version of the same search; kept as the reference the
/// parallel kernel is tested and benchmarked against.
std::uint64_t enumerate_topologies_serial(const LatticeContext& ctx, std::uint64_t k,
                                          const EnumBudget& budget = {}, const FamilySink& sink = {});

/// All k-element topologies, in emission order.
std::vector<TopologyFamily> list_topologies(const LatticeContext& ctx, std::uint64_t k,
                                            const EnumBudget& budget = {});

/// Census k -> count for k = 2 .. m^n (zero counts included). Requires
/// 2^(m^n - 2) <= budget.max_candidates.
std::map<std::uint64_t, std::uint64_t> enumerate_all_sizes(const LatticeContext& ctx,
                                                           const EnumBudget& budget = {});

} // namespace fuzzytop
