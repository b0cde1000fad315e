#include "fuzzytop/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fuzzytop/errors.hpp"

namespace fuzzytop {

LatticeContext::LatticeContext(int n, int m) : n_(n), m_(m), size_(1)
{
    if (n < 1) {
        throw InvalidArgs("n must be >= 1, got " + std::to_string(n));
    }
    if (m < 2) {
        throw InvalidArgs("m must be >= 2, got " + std::to_string(m));
    }
    constexpr std::uint64_t limit = std::numeric_limits<Code>::max();
    for (int i = 0; i < n; ++i) {
        if (size_ > limit / static_cast<std::uint64_t>(m)) {
            throw InvalidArgs("lattice " + std::to_string(m) + "^" + std::to_string(n) +
                              " is too large to index");
        }
        size_ *= static_cast<std::uint64_t>(m);
    }
}

void LatticeContext::check(Code c) const
{
    if (!valid(c)) {
        throw OutOfRange("code " + std::to_string(c) + " outside [0, " + std::to_string(size_) + ")");
    }
}

Code encode(std::span<const Grade> g, const LatticeContext& ctx)
{
    if (g.size() != static_cast<std::size_t>(ctx.n())) {
        throw OutOfRange("grade vector has length " + std::to_string(g.size()) + ", expected " +
                         std::to_string(ctx.n()));
    }
    const auto m = static_cast<Grade>(ctx.m());
    Code code = 0;
    Code weight = 1;
    for (Grade x : g) {
        if (x >= m) {
            throw OutOfRange("grade " + std::to_string(x) + " outside [0, " + std::to_string(m - 1) + "]");
        }
        code += x * weight;
        weight *= m;
    }
    return code;
}

GradeVector decode(Code c, const LatticeContext& ctx)
{
    ctx.check(c);
    const auto m = static_cast<Code>(ctx.m());
    GradeVector g(static_cast<std::size_t>(ctx.n()));
    for (auto& x : g) {
        x = c % m;
        c /= m;
    }
    return g;
}

namespace {

template <typename Op>
Code digitwise(Code a, Code b, const LatticeContext& ctx, Op op)
{
    ctx.check(a);
    ctx.check(b);
    const auto m = static_cast<Code>(ctx.m());
    Code out = 0;
    Code weight = 1;
    for (int i = 0; i < ctx.n(); ++i) {
        out += op(a % m, b % m) * weight;
        a /= m;
        b /= m;
        weight *= m;
    }
    return out;
}

} // namespace

Code meet(Code a, Code b, const LatticeContext& ctx)
{
    return digitwise(a, b, ctx, [](Code x, Code y) { return std::min(x, y); });
}

Code join(Code a, Code b, const LatticeContext& ctx)
{
    return digitwise(a, b, ctx, [](Code x, Code y) { return std::max(x, y); });
}

bool leq(Code a, Code b, const LatticeContext& ctx)
{
    ctx.check(a);
    ctx.check(b);
    const auto m = static_cast<Code>(ctx.m());
    for (int i = 0; i < ctx.n(); ++i) {
        if (a % m > b % m) {
            return false;
        }
        a /= m;
        b /= m;
    }
    return true;
}

Code complement(Code a, const LatticeContext& ctx)
{
    ctx.check(a);
    // (m-1, ..., m-1) - g digitwise never borrows.
    return ctx.top() - a;
}

Code permute(Code a, std::span<const int> perm, const LatticeContext& ctx)
{
    if (perm.size() != static_cast<std::size_t>(ctx.n())) {
        throw InvalidArgs("permutation length does not match n");
    }
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= ctx.n() || seen[static_cast<std::size_t>(p)]) {
            throw InvalidArgs("not a permutation of the points");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    const GradeVector g = decode(a, ctx);
    GradeVector out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = g[static_cast<std::size_t>(perm[i])];
    }
    return encode(out, ctx);
}

LatticeOps::LatticeOps(const LatticeContext& ctx) : ctx_(ctx), size_(static_cast<std::size_t>(ctx.size()))
{
    const auto n = static_cast<std::size_t>(ctx.n());
    const auto m = static_cast<Code>(ctx.m());
    weights_.resize(n);
    Code w = 1;
    for (auto& x : weights_) {
        x = w;
        w *= m;
    }
    digits_.resize(size_ * n);
    for (std::size_t c = 0; c < size_; ++c) {
        Code rest = static_cast<Code>(c);
        for (std::size_t i = 0; i < n; ++i) {
            digits_[c * n + i] = rest % m;
            rest /= m;
        }
    }
    if (size_ <= kTableLimit) {
        meet_table_.resize(size_ * size_);
        join_table_.resize(size_ * size_);
        for (std::size_t a = 0; a < size_; ++a) {
            for (std::size_t b = 0; b < size_; ++b) {
                meet_table_[a * size_ + b] = combine<true>(static_cast<Code>(a), static_cast<Code>(b));
                join_table_[a * size_ + b] = combine<false>(static_cast<Code>(a), static_cast<Code>(b));
            }
        }
    }
}

} // namespace fuzzytop
