#include "fuzzytop/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <omp.h>

#include "fuzzytop/bigint.hpp"
#include "fuzzytop/errors.hpp"

namespace fuzzytop {

namespace {

std::vector<Code> sorted_unique(std::span<const Code> codes, const LatticeContext& ctx)
{
    std::vector<Code> out(codes.begin(), codes.end());
    for (Code c : out) {
        ctx.check(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Depth-first search over proper members (codes strictly between bottom and
// top) chosen in increasing order.
//
// `pending` holds meets/joins of chosen members that are not chosen yet.
// Every pending code is larger than the last chosen one, otherwise the
// branch is dead: later choices only add larger codes. The next choice can
// therefore never pass the smallest pending code, and a branch dies as soon
// as chosen + pending exceeds the target. A node with nothing pending is a
// topology.
class Search {
public:
    enum class Mode { exact, census };

    Search(const LatticeOps& ops, std::size_t target, Mode mode)
        : ops_(ops), top_(ops.context().top()), target_(target), mode_(mode),
          state_(static_cast<std::size_t>(ops.context().size()), kFree),
          pending_bits_((static_cast<std::size_t>(ops.context().size()) + 63) / 64, 0)
    {
        chosen_.reserve(target);
    }

    // Explores every topology whose smallest proper member is `first`.
    template <typename Visit>
    void run_from(Code first, Visit&& visit)
    {
        const std::size_t mark = added_.size();
        bool was_pending = false;
        if (push(first, was_pending)) {
            descend(first, visit);
            pop(first, mark, was_pending);
        }
    }

    // Whether `first` can start a family of the target size at all.
    bool viable_first(Code first) const noexcept
    {
        return mode_ == Mode::census || static_cast<std::size_t>(top_ - first) >= target_;
    }

private:
    static constexpr std::uint8_t kFree = 0;
    static constexpr std::uint8_t kChosen = 1;
    static constexpr std::uint8_t kPending = 2;

    template <typename Visit>
    void descend(Code last, Visit& visit)
    {
        if (pending_count_ == 0 && (mode_ == Mode::census || chosen_.size() == target_)) {
            visit(std::span<const Code>(chosen_));
        }
        if (chosen_.size() == target_) {
            return;
        }
        const Code hi = pending_count_ != 0 ? next_pending(last + 1) : top_ - 1;
        const std::size_t need = target_ - chosen_.size();
        for (Code c = last + 1; c <= hi; ++c) {
            if (mode_ == Mode::exact && static_cast<std::size_t>(top_ - c) < need) {
                break;
            }
            const std::size_t mark = added_.size();
            bool was_pending = false;
            if (push(c, was_pending)) {
                descend(c, visit);
                pop(c, mark, was_pending);
            }
        }
    }

    bool push(Code c, bool& was_pending)
    {
        const std::size_t mark = added_.size();
        was_pending = state_[c] == kPending;
        if (was_pending) {
            clear_pending(c);
        }
        bool ok = true;
        for (Code s : chosen_) {
            for (Code r : {ops_.meet(s, c), ops_.join(s, c)}) {
                if (r == 0 || r == top_ || r == c || state_[r] != kFree) {
                    continue;
                }
                if (r < c) {
                    ok = false;
                    break;
                }
                set_pending(r);
                added_.push_back(r);
            }
            if (!ok) {
                break;
            }
        }
        if (ok && chosen_.size() + 1 + pending_count_ > target_) {
            ok = false;
        }
        if (!ok) {
            rollback(mark);
            if (was_pending) {
                set_pending(c);
            }
            return false;
        }
        state_[c] = kChosen;
        chosen_.push_back(c);
        return true;
    }

    void pop(Code c, std::size_t mark, bool was_pending)
    {
        chosen_.pop_back();
        state_[c] = kFree;
        rollback(mark);
        if (was_pending) {
            set_pending(c);
        }
    }

    void rollback(std::size_t mark)
    {
        while (added_.size() > mark) {
            clear_pending(added_.back());
            added_.pop_back();
        }
    }

    void set_pending(Code r)
    {
        state_[r] = kPending;
        pending_bits_[r >> 6U] |= std::uint64_t{1} << (r & 63U);
        ++pending_count_;
    }

    void clear_pending(Code r)
    {
        state_[r] = kFree;
        pending_bits_[r >> 6U] &= ~(std::uint64_t{1} << (r & 63U));
        --pending_count_;
    }

    Code next_pending(Code from) const noexcept
    {
        std::size_t word = from >> 6U;
        std::uint64_t bits = pending_bits_[word] & (~std::uint64_t{0} << (from & 63U));
        while (bits == 0) {
            bits = pending_bits_[++word];
        }
        return static_cast<Code>(word * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }

    const LatticeOps& ops_;
    Code top_;
    std::size_t target_;
    Mode mode_;
    std::vector<Code> chosen_;
    std::vector<Code> added_;
    std::vector<std::uint8_t> state_;
    std::vector<std::uint64_t> pending_bits_;
    std::size_t pending_count_ = 0;
};

TopologyFamily make_family(const LatticeContext& ctx, std::span<const Code> proper)
{
    TopologyFamily f{ctx, {}};
    f.members.reserve(proper.size() + 2);
    f.members.push_back(ctx.bottom());
    f.members.insert(f.members.end(), proper.begin(), proper.end());
    f.members.push_back(ctx.top());
    return f;
}

void check_lattice_size(const LatticeContext& ctx, const EnumBudget& budget)
{
    if (budget.max_candidates == 0 || budget.max_lattice_size == 0) {
        throw InvalidArgs("enumeration budget must be positive");
    }
    if (ctx.size() > budget.max_lattice_size) {
        throw BudgetExceeded("lattice size " + std::to_string(ctx.size()) + " exceeds cap " +
                             std::to_string(budget.max_lattice_size));
    }
}

std::uint64_t enumerate_impl(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget,
                             const FamilySink& sink, bool parallel)
{
    check_enumerable(ctx, k, budget);
    const std::size_t target = static_cast<std::size_t>(k - 2);
    if (target == 0) {
        if (sink) {
            sink(make_family(ctx, {}));
        }
        return 1;
    }

    const LatticeOps ops(ctx);
    const Code top = ctx.top();

    if (!parallel) {
        Search search(ops, target, Search::Mode::exact);
        std::uint64_t total = 0;
        for (Code first = 1; first < top && search.viable_first(first); ++first) {
            search.run_from(first, [&](std::span<const Code> proper) {
                ++total;
                if (sink) {
                    sink(make_family(ctx, proper));
                }
            });
        }
        return total;
    }

    // One bucket per smallest proper member; buckets hold flattened proper
    // member lists and are replayed in order so emission stays sorted.
    std::vector<std::vector<Code>> buckets(sink ? static_cast<std::size_t>(top) : 0);
    std::uint64_t total = 0;
    const auto last_first = static_cast<std::int64_t>(top) - 1;
#pragma omp parallel reduction(+ : total)
    {
        Search search(ops, target, Search::Mode::exact);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 1; i <= last_first; ++i) {
            const auto first = static_cast<Code>(i);
            if (!search.viable_first(first)) {
                continue;
            }
            search.run_from(first, [&](std::span<const Code> proper) {
                ++total;
                if (sink) {
                    auto& bucket = buckets[first];
                    bucket.insert(bucket.end(), proper.begin(), proper.end());
                }
            });
        }
    }
    if (sink) {
        for (const auto& bucket : buckets) {
            for (std::size_t off = 0; off < bucket.size(); off += target) {
                sink(make_family(ctx, std::span<const Code>(bucket).subspan(off, target)));
            }
        }
    }
    return total;
}

} // namespace

bool is_topology(std::span<const Code> members, const LatticeContext& ctx)
{
    const std::vector<Code> fam = sorted_unique(members, ctx);
    const auto contains = [&](Code c) { return std::binary_search(fam.begin(), fam.end(), c); };
    if (!contains(ctx.bottom()) || !contains(ctx.top())) {
        return false;
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            if (!contains(meet(fam[i], fam[j], ctx)) || !contains(join(fam[i], fam[j], ctx))) {
                return false;
            }
        }
    }
    return true;
}

TopologyFamily closure(std::span<const Code> seed, const LatticeContext& ctx)
{
    std::vector<Code> fam = sorted_unique(seed, ctx);
    for (Code c : {ctx.bottom(), ctx.top()}) {
        if (!std::binary_search(fam.begin(), fam.end(), c)) {
            fam.insert(std::upper_bound(fam.begin(), fam.end(), c), c);
        }
    }
    // Worklist fixpoint: every new member is combined with all current ones.
    std::vector<Code> work = fam;
    while (!work.empty()) {
        const Code x = work.back();
        work.pop_back();
        std::vector<Code> found;
        for (Code y : fam) {
            for (Code r : {meet(x, y, ctx), join(x, y, ctx)}) {
                if (!std::binary_search(fam.begin(), fam.end(), r)) {
                    found.push_back(r);
                }
            }
        }
        for (Code r : found) {
            auto it = std::lower_bound(fam.begin(), fam.end(), r);
            if (it == fam.end() || *it != r) {
                fam.insert(it, r);
                work.push_back(r);
            }
        }
    }
    return TopologyFamily{ctx, std::move(fam)};
}

void check_enumerable(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget)
{
    if (k < 2 || k > ctx.size()) {
        throw InvalidK("k = " + std::to_string(k) + " outside [2, " + std::to_string(ctx.size()) + "]");
    }
    check_lattice_size(ctx, budget);
    const BigInt candidates = binomial(ctx.size() - 2, k - 2);
    if (candidates > budget.max_candidates) {
        throw BudgetExceeded("C(" + std::to_string(ctx.size() - 2) + ", " + std::to_string(k - 2) +
                             ") = " + to_string(candidates) + " candidate families exceeds budget " +
                             std::to_string(budget.max_candidates));
    }
}

std::uint64_t enumerate_topologies(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget,
                                   const FamilySink& sink)
{
    return enumerate_impl(ctx, k, budget, sink, true);
}

std::uint64_t enumerate_topologies_serial(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget,
                                          const FamilySink& sink)
{
    return enumerate_impl(ctx, k, budget, sink, false);
}

std::vector<TopologyFamily> list_topologies(const LatticeContext& ctx, std::uint64_t k, const EnumBudget& budget)
{
    std::vector<TopologyFamily> out;
    enumerate_topologies(ctx, k, budget, [&](const TopologyFamily& f) { out.push_back(f); });
    return out;
}

std::map<std::uint64_t, std::uint64_t> enumerate_all_sizes(const LatticeContext& ctx, const EnumBudget& budget)
{
    check_lattice_size(ctx, budget);
    const std::uint64_t proper = ctx.size() - 2;
    if (proper >= 64 || (std::uint64_t{1} << proper) > budget.max_candidates) {
        throw BudgetExceeded("census of 2^" + std::to_string(proper) + " candidate families exceeds budget " +
                             std::to_string(budget.max_candidates));
    }

    std::vector<std::uint64_t> hist(static_cast<std::size_t>(ctx.size()) + 1, 0);
    hist[2] = 1;
    if (proper > 0) {
        const LatticeOps ops(ctx);
        const auto last_first = static_cast<std::int64_t>(ctx.top()) - 1;
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(hist.size(), 0);
            Search search(ops, static_cast<std::size_t>(proper), Search::Mode::census);
#pragma omp for schedule(dynamic, 1)
            for (std::int64_t i = 1; i <= last_first; ++i) {
                search.run_from(static_cast<Code>(i),
                                [&](std::span<const Code> chosen) { ++local[chosen.size() + 2]; });
            }
#pragma omp critical
            for (std::size_t s = 0; s < hist.size(); ++s) {
                hist[s] += local[s];
            }
        }
    }

    std::map<std::uint64_t, std::uint64_t> census;
    for (std::uint64_t s = 2; s <= ctx.size(); ++s) {
        census[s] = hist[s];
    }
    return census;
}

} // namespace fuzzytop
