#include <doctest.h>

#include <array>
#include <numeric>
#include <random>

#include "fuzzytop/errors.hpp"
#include "fuzzytop/lattice.hpp"
#include "oracle.hpp"

using namespace fuzzytop;

namespace {

Code enc(std::initializer_list<Grade> g, const LatticeContext& ctx)
{
    const GradeVector v(g);
    return encode(v, ctx);
}

} // namespace

TEST_CASE("context validation")
{
    CHECK_THROWS_AS(LatticeContext(0, 3), InvalidArgs);
    CHECK_THROWS_AS(LatticeContext(2, 1), InvalidArgs);
    CHECK_THROWS_AS(LatticeContext(32, 2), InvalidArgs); // 2^32 codes do not fit
    const LatticeContext ctx(2, 3);
    CHECK(ctx.size() == 9);
    CHECK(ctx.bottom() == 0);
    CHECK(ctx.top() == 8);
    CHECK(LatticeContext(31, 2).size() == (std::uint64_t{1} << 31));
}

TEST_CASE("encode")
{
    const LatticeContext ctx(2, 3);
    CHECK(enc({0, 0}, ctx) == 0);
    CHECK(enc({2, 2}, ctx) == 8);
    // positional arithmetic: 1 * 3^0 + 2 * 3^1
    CHECK(enc({1, 2}, ctx) == 1 * 1 + 2 * 3);

    CHECK_THROWS_AS(enc({3, 0}, ctx), OutOfRange);
    CHECK_THROWS_AS(enc({0, 0, 0}, ctx), OutOfRange);
    CHECK_THROWS_AS(enc({0}, ctx), OutOfRange);
    CHECK_THROWS_AS(decode(9, ctx), OutOfRange);
}

TEST_CASE("encode/decode agree with the oracle digits on every code")
{
    for (auto [n, m] : oracle::contexts_up_to(4096)) {
        const LatticeContext ctx(n, m);
        const oracle::Lattice lat(n, m);
        for (Code c = 0; c < ctx.size(); ++c) {
            const GradeVector g = decode(c, ctx);
            const auto d = lat.digits(c);
            REQUIRE(std::equal(g.begin(), g.end(), d.begin(), d.end(),
                               [](Grade a, int b) { return a == static_cast<Grade>(b); }));
            REQUIRE(encode(g, ctx) == c);
        }
    }
}

TEST_CASE("meet, join, leq examples")
{
    const LatticeContext ctx(2, 3);
    const oracle::Lattice lat(2, 3);
    for (Code x = 0; x < ctx.size(); ++x) {
        CHECK(meet(x, 0, ctx) == 0);
        CHECK(meet(x, x, ctx) == x);
        CHECK(join(x, ctx.top(), ctx) == ctx.top());
        CHECK(join(0, x, ctx) == x);
        CHECK(leq(0, x, ctx));
    }
    CHECK(meet(enc({1, 2}, ctx), enc({2, 0}, ctx), ctx) == enc({1, 0}, ctx));
    CHECK(meet(enc({1, 2}, ctx), enc({2, 0}, ctx), ctx) == lat.pointwise_min(7, 2));
    CHECK(join(enc({0, 1}, ctx), enc({2, 0}, ctx), ctx) == enc({2, 1}, ctx));
    CHECK(join(enc({0, 1}, ctx), enc({2, 0}, ctx), ctx) == lat.pointwise_max(3, 2));
    CHECK(leq(enc({1, 2}, ctx), enc({2, 2}, ctx), ctx));
    CHECK_FALSE(leq(enc({1, 0}, ctx), enc({0, 2}, ctx), ctx));
    CHECK_FALSE(leq(enc({0, 2}, ctx), enc({1, 0}, ctx), ctx));

    CHECK_THROWS_AS(meet(9, 0, ctx), OutOfRange);
    CHECK_THROWS_AS(join(0, 9, ctx), OutOfRange);
    CHECK_THROWS_AS(leq(0, 100, ctx), OutOfRange);
}

TEST_CASE("pairwise laws on every context with m^n <= 256")
{
    for (auto [n, m] : oracle::contexts_up_to(256)) {
        const LatticeContext ctx(n, m);
        const oracle::Lattice lat(n, m);
        const Code top = ctx.top();
        for (Code a = 0; a <= top; ++a) {
            const Code ca = complement(a, ctx);
            REQUIRE(complement(ca, ctx) == a);
            REQUIRE(meet(a, top, ctx) == a);
            REQUIRE(join(a, 0, ctx) == a);
            for (Code b = 0; b <= top; ++b) {
                const Code mab = meet(a, b, ctx);
                const Code jab = join(a, b, ctx);
                REQUIRE(mab == lat.pointwise_min(a, b));
                REQUIRE(jab == lat.pointwise_max(a, b));
                REQUIRE(mab == meet(b, a, ctx));
                REQUIRE(jab == join(b, a, ctx));
                REQUIRE(meet(a, jab, ctx) == a);
                REQUIRE(join(a, mab, ctx) == a);
                REQUIRE(complement(mab, ctx) == join(ca, complement(b, ctx), ctx));
                const bool le = leq(a, b, ctx);
                REQUIRE(le == (mab == a));
                REQUIRE(le == (jab == b));
            }
        }
    }
}

TEST_CASE("associativity on every triple with m^n <= 256")
{
    for (auto [n, m] : oracle::contexts_up_to(256)) {
        const LatticeContext ctx(n, m);
        const LatticeOps ops(ctx);
        const Code top = ctx.top();
        for (Code a = 0; a <= top; ++a) {
            for (Code b = 0; b <= top; ++b) {
                const Code mab = ops.meet(a, b);
                const Code jab = ops.join(a, b);
                for (Code c = 0; c <= top; ++c) {
                    if (ops.meet(mab, c) != ops.meet(a, ops.meet(b, c)) ||
                        ops.join(jab, c) != ops.join(a, ops.join(b, c))) {
                        FAIL("associativity broken at n=" << n << " m=" << m << " (" << a << "," << b << ","
                                                          << c << ")");
                    }
                }
            }
        }
    }
}

TEST_CASE("LatticeOps matches the free functions with and without tables")
{
    std::mt19937 rng(7);
    for (auto [n, m] : {std::pair{2, 3}, std::pair{4, 5}, std::pair{11, 2}, std::pair{3, 16}, std::pair{1, 4000}}) {
        const LatticeContext ctx(n, m);
        const LatticeOps ops(ctx);
        std::uniform_int_distribution<Code> pick(0, ctx.top());
        for (int i = 0; i < 5000; ++i) {
            const Code a = pick(rng);
            const Code b = pick(rng);
            REQUIRE(ops.meet(a, b) == meet(a, b, ctx));
            REQUIRE(ops.join(a, b) == join(a, b, ctx));
        }
    }
}

TEST_CASE("permute relabels points")
{
    const LatticeContext ctx(3, 4);
    const std::array<int, 3> swap01{1, 0, 2};
    CHECK(decode(permute(enc({1, 2, 3}, ctx), swap01, ctx), ctx) == GradeVector{2, 1, 3});
    const std::array<int, 3> bad{0, 0, 2};
    CHECK_THROWS_AS(permute(0, bad, ctx), InvalidArgs);
    // Permutations are lattice automorphisms.
    for (Code a = 0; a < ctx.size(); a += 3) {
        for (Code b = 0; b < ctx.size(); b += 5) {
            CHECK(permute(meet(a, b, ctx), swap01, ctx) ==
                  meet(permute(a, swap01, ctx), permute(b, swap01, ctx), ctx));
        }
    }
}
