#include <doctest.h>

#include <set>

#include "gpha/group.hpp"

using namespace gpha;

TEST_CASE("mixed-radix ranking, last coordinate fastest") {
    Group g({2, 2});
    CHECK(g.size == 4);
    CHECK(g.unrank(0) == Coords{0, 0});
    CHECK(g.unrank(1) == Coords{0, 1});
    CHECK(g.unrank(2) == Coords{1, 0});
    CHECK(g.unrank(3) == Coords{1, 1});

    Group g44({4, 4});
    CHECK(g44.unrank(1) == Coords{0, 1});
    CHECK(g44.unrank(2) == Coords{0, 2});
    CHECK(g44.unrank(15) == Coords{3, 3});

    Group g33({3, 3});
    CHECK(g33.size == 9);
    CHECK(g33.unrank(8) == Coords{2, 2});
}

TEST_CASE("rank and unrank are mutually inverse") {
    for (const auto& orders : {std::vector<int>{2, 3, 4}, {5}, {2, 2, 2, 2}}) {
        Group g(orders);
        for (long long r = 0; r < g.size; ++r) CHECK(g.rank(g.unrank(r)) == r);
    }
}

TEST_CASE("group arithmetic") {
    Group g({3, 4});
    long long a = g.rank(std::vector<int>{2, 3});
    long long b = g.rank(std::vector<int>{2, 2});
    CHECK(g.unrank(g.add(a, b)) == Coords{1, 1});
    CHECK(g.add(a, g.neg(a)) == 0);
    CHECK(g.sub(a, a) == 0);
}

TEST_CASE("invalid group orders are rejected") {
    CHECK_THROWS_AS(Group({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Group({0}), std::invalid_argument);
}

TEST_CASE("expansion context of the binary cube") {
    ExpansionContext ctx = expansion_context(Group({2, 2, 2}), {1, 1, 1}, 2);
    CHECK(ctx.big.orders == std::vector<int>{4, 4, 4});
    std::set<Coords> lset;
    for (long long l : ctx.L) lset.insert(ctx.big.unrank(l));
    std::set<Coords> expected = {{0, 0, 0}, {0, 0, 2}, {0, 2, 0}, {0, 2, 2},
                                 {2, 0, 0}, {2, 0, 2}, {2, 2, 0}, {2, 2, 2}};
    CHECK(lset == expected);
    CHECK(ctx.K.size() == 4);
    CHECK(ctx.Lj.size() == 2);
    CHECK(ctx.Lj[0] == ctx.K);
}

TEST_CASE("expansion context over Z_3^2") {
    ExpansionContext ctx = expansion_context(Group({3, 3}), {1, 1}, 3);
    CHECK(ctx.big.orders == std::vector<int>{9, 9});
    CHECK(ctx.L.size() == 9);
    std::set<Coords> lset;
    for (long long l : ctx.L) lset.insert(ctx.big.unrank(l));
    CHECK(lset.count({3, 6}) == 1);
    CHECK(lset.count({6, 3}) == 1);
    CHECK(lset.count({0, 3}) == 1);
    CHECK(ctx.K.size() == 3);
}

TEST_CASE("type zero expansion is the identity") {
    ExpansionContext ctx = expansion_context(Group({2, 2}), {0, 0}, 2);
    CHECK(ctx.big.orders == std::vector<int>{2, 2});
    CHECK(ctx.L == std::vector<long long>{0});
    CHECK(ctx.K == std::vector<long long>{0});
}

TEST_CASE("expansion subgroup sizes and coset structure") {
    for (int h : {2, 3}) {
        for (const auto& zz : {std::vector<int>{1, 0}, {1, 1}}) {
            Group base({3, 4});
            ExpansionContext ctx = expansion_context(base, zz, h);
            int wt = 0;
            for (int zi : zz) wt += zi;
            long long lExpect = 1;
            for (int i = 0; i < wt; ++i) lExpect *= h;
            CHECK(static_cast<long long>(ctx.L.size()) == lExpect);
            CHECK(static_cast<long long>(ctx.K.size()) == lExpect / h);
            CHECK(ctx.big.size / static_cast<long long>(ctx.L.size()) == base.size);
            // cosets of K inside L
            std::set<long long> cosets;
            for (long long l : ctx.L) {
                long long mn = l;
                for (long long k : ctx.K) mn = std::min(mn, ctx.big.add(l, k));
                cosets.insert(mn);
            }
            CHECK(static_cast<int>(cosets.size()) == h);
        }
    }
}

TEST_CASE("graded parts of L are closed under addition") {
    ExpansionContext ctx = expansion_context(Group({2, 3}), {1, 1}, 2);
    for (int j = 0; j < ctx.h; ++j)
        for (int k = 0; k < ctx.h; ++k)
            for (long long a : ctx.Lj[j])
                for (long long b : ctx.Lj[k]) {
                    long long s = ctx.big.add(a, b);
                    auto& part = ctx.Lj[(j + k) % ctx.h];
                    CHECK(std::find(part.begin(), part.end(), s) != part.end());
                }
}

TEST_CASE("type vector length must match") {
    CHECK_THROWS_AS(expansion_context(Group({2, 2}), {1}, 2), std::invalid_argument);
}

static std::set<std::set<long long>> brute_cosets(const Group& e, const std::vector<long long>& k) {
    std::set<std::set<long long>> out;
    for (long long x = 0; x < e.size; ++x) {
        std::set<long long> coset;
        for (long long kk : k) coset.insert(e.add(x, kk));
        out.insert(coset);
    }
    return out;
}

TEST_CASE("quotient orders agree with brute-force coset enumeration") {
    {
        ExpansionContext ctx = expansion_context(Group({2, 2, 2}), {1, 1, 1}, 2);
        QuotientGroup q = quotient(ctx.big, ctx.K);
        CHECK(q.order() == 16);
        CHECK(brute_cosets(ctx.big, ctx.K).size() == 16);
    }
    {
        ExpansionContext ctx = expansion_context(Group({3, 3}), {1, 1}, 3);
        QuotientGroup q = quotient(ctx.big, ctx.K);
        CHECK(q.order() == 27);
        CHECK(brute_cosets(ctx.big, ctx.K).size() == 27);
    }
}

TEST_CASE("quotient by the trivial subgroup is the group itself") {
    Group e({3, 2});
    QuotientGroup q = quotient(e, {0});
    CHECK(q.order() == e.size);
    for (long long x = 0; x < e.size; ++x) CHECK(q.reps[static_cast<std::size_t>(x)] == x);
}

TEST_CASE("quotient rejects non-subgroups") {
    Group e({4});
    CHECK_THROWS_AS(quotient(e, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(quotient(e, {1, 3}), std::invalid_argument);
}

TEST_CASE("quotient cosets canonicalize to the rank-minimal member") {
    ExpansionContext ctx = expansion_context(Group({3, 3}), {1, 1}, 3);
    QuotientGroup q = quotient(ctx.big, ctx.K);
    for (long long x = 0; x < ctx.big.size; ++x) {
        long long mn = x;
        for (long long k : ctx.K) mn = std::min(mn, ctx.big.add(x, k));
        CHECK(q.canon[static_cast<std::size_t>(x)] == mn);
    }
}
