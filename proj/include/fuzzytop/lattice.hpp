#pragma once

// Fuzzy subsets of an n-point set with grades in an m-element chain.
//
// A fuzzy subset is a grade vector g = (g[0], ..., g[n-1]) with every
// g[i] in {0, ..., m-1}; rank 0 is the chain minimum and m-1 its maximum.
// Vectors are identified with mixed-radix codes sum_i g[i] * m^i, so the
// whole lattice M^X is the code range [0, m^n) with bottom 0 and top m^n-1.

#include <cstdint>
#include <span>
#include <vector>

namespace fuzzytop {

using Code = std::uint32_t;
using Grade = std::uint32_t;
using GradeVector = std::vector<Grade>;

class LatticeContext {
public:
    /// Throws InvalidArgs unless n >= 1, m >= 2 and m^n fits a Code.
    LatticeContext(int n, int m);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    /// Number of fuzzy subsets, m^n.
    std::uint64_t size() const noexcept { return size_; }
    Code bottom() const noexcept { return 0; }
    Code top() const noexcept { return static_cast<Code>(size_ - 1); }

    bool valid(Code c) const noexcept { return c < size_; }
    void check(Code c) const;

    friend bool operator==(const LatticeContext&, const LatticeContext&) = default;

private:
    int n_;
    int m_;
    std::uint64_t size_;
};

Code encode(std::span<const Grade> g, const LatticeContext& ctx);
GradeVector decode(Code c, const LatticeContext& ctx);

Code meet(Code a, Code b, const LatticeContext& ctx);
Code join(Code a, Code b, const LatticeContext& ctx);
bool leq(Code a, Code b, const LatticeContext& ctx);

/// Order-reversing involution t -> (m-1) - t applied to every grade.
Code complement(Code a, const LatticeContext& ctx);

/// Relabels the points of X: grade i of the result is grade perm[i] of `a`.
Code permute(Code a, std::span<const int> perm, const LatticeContext& ctx);

/// Precomputed meet/join for the enumeration hot loop. Small lattices get
/// full tables; larger ones fall back to per-digit arithmetic on cached
/// grade vectors.
class LatticeOps {
public:
    explicit LatticeOps(const LatticeContext& ctx);

    const LatticeContext& context() const noexcept { return ctx_; }

    Code meet(Code a, Code b) const noexcept
    {
        if (!meet_table_.empty()) {
            return meet_table_[static_cast<std::size_t>(a) * size_ + b];
        }
        return combine<true>(a, b);
    }

    Code join(Code a, Code b) const noexcept
    {
        if (!join_table_.empty()) {
            return join_table_[static_cast<std::size_t>(a) * size_ + b];
        }
        return combine<false>(a, b);
    }

    static constexpr std::uint64_t kTableLimit = 1024;

private:
    template <bool Min>
    Code combine(Code a, Code b) const noexcept
    {
        const std::size_t n = static_cast<std::size_t>(ctx_.n());
        const Grade* da = &digits_[a * n];
        const Grade* db = &digits_[b * n];
        Code out = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Grade g = Min ? (da[i] < db[i] ? da[i] : db[i]) : (da[i] < db[i] ? db[i] : da[i]);
            out += g * weights_[i];
        }
        return out;
    }

    LatticeContext ctx_;
    std::size_t size_;
    std::vector<Code> weights_;
    std::vector<Grade> digits_;
    std::vector<Code> meet_table_;
    std::vector<Code> join_table_;
};

} // namespace fuzzytop
