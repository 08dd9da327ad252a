#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gpha/errors.hpp"

namespace gpha {

using Coords = std::vector<int>;

/// Finite abelian group Z_{s_1} x ... x Z_{s_m}. Elements are identified
/// with their rank in mixed-radix order, last coordinate varying fastest,
/// so rank 0 is the identity and rank 1 is (0,...,0,1).
struct Group {
    std::vector<int> orders;
    std::vector<long long> strides; // strides[i] = prod of orders after i
    long long size = 1;

    Group() = default;

    explicit Group(std::vector<int> ords) : orders(std::move(ords)) {
        for (int s : orders)
            if (s < 2) throw std::invalid_argument("group order must be >= 2");
        strides.assign(orders.size(), 1);
        for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
            strides[i] = size;
            size = detail::checked_mul(size, orders[i]);
        }
    }

    std::size_t arity() const { return orders.size(); }

    long long rank(std::span<const int> coords) const {
        if (coords.size() != orders.size())
            throw std::invalid_argument("coordinate arity mismatch");
        long long r = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            if (coords[i] < 0 || coords[i] >= orders[i])
                throw std::invalid_argument("coordinate out of range");
            r += strides[i] * coords[i];
        }
        return r;
    }

    Coords unrank(long long r) const {
        if (r < 0 || r >= size) throw std::invalid_argument("rank out of range");
        Coords c(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            c[i] = static_cast<int>(r / strides[i]);
            r %= strides[i];
        }
        return c;
    }

    long long add(long long a, long long b) const {
        long long r = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            int ca = static_cast<int>(a / strides[i] % orders[i]);
            int cb = static_cast<int>(b / strides[i] % orders[i]);
            int s = ca + cb;
            if (s >= orders[i]) s -= orders[i];
            r += strides[i] * s;
        }
        return r;
    }

    long long neg(long long a) const {
        long long r = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            int ca = static_cast<int>(a / strides[i] % orders[i]);
            if (ca != 0) r += strides[i] * (orders[i] - ca);
        }
        return r;
    }

    long long sub(long long a, long long b) const { return add(a, neg(b)); }

    bool operator==(const Group& o) const { return orders == o.orders; }
};

inline Group make_group(const std::vector<int>& orders) { return Group(orders); }

/// Dense rank-indexed addition table; worth precomputing for the O(n^3)
/// cocycle checks on small groups.
inline std::vector<int32_t> addition_table(const Group& g) {
    const long long n = g.size;
    std::vector<int32_t> t(static_cast<std::size_t>(n) * n);
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = static_cast<int32_t>(g.add(a, b));
    return t;
}

/// The expansion group E of a base group for a given type vector z and
/// modulus h, together with the subgroups L >= K and the graded parts
/// L_j = { g in L : sum_i g_i/s_i = j (mod h) }.  L_0 = K.
struct ExpansionContext {
    Group base;
    std::vector<int> z;
    int h = 2;
    Group big;                               // E
    std::vector<long long> L;                // ranks in E, sorted
    std::vector<long long> K;                // ranks in E, sorted
    std::vector<std::vector<long long>> Lj;  // partition of L by grade

    int weight() const {
        return static_cast<int>(std::count(z.begin(), z.end(), 1));
    }

    /// grade b = sum_i g_i/s_i mod h of an element of L (coords of g are
    /// multiples of s_i in the z-marked positions, zero elsewhere).
    int grade(long long rankInBig) const {
        Coords c = big.unrank(rankInBig);
        long long b = 0;
        for (std::size_t i = 0; i < c.size(); ++i) b += c[i] / base.orders[i];
        return static_cast<int>(b % h);
    }
};

inline ExpansionContext expansion_context(const Group& base, const std::vector<int>& z, int h) {
    if (z.size() != base.arity())
        throw std::invalid_argument("type vector length must match group arity");
    if (h < 2) throw std::invalid_argument("modulus must be >= 2");
    for (int zi : z)
        if (zi != 0 && zi != 1) throw std::invalid_argument("type vector entries must be 0 or 1");

    ExpansionContext ctx;
    ctx.base = base;
    ctx.z = z;
    ctx.h = h;

    std::vector<int> bigOrders(base.orders);
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] == 1) bigOrders[i] = base.orders[i] * h;
    ctx.big = Group(bigOrders);

    // L = products of {0, s_i, ..., (h-1)s_i} in marked coordinates.
    ctx.Lj.assign(h, {});
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] == 1) marked.push_back(i);
    long long count = 1;
    for (std::size_t i = 0; i < marked.size(); ++i) count *= h;
    Coords cur(base.arity(), 0);
    for (long long idx = 0; idx < count; ++idx) {
        long long t = idx;
        long long b = 0;
        for (std::size_t mi : marked) {
            int y = static_cast<int>(t % h);
            t /= h;
            cur[mi] = y * base.orders[mi];
            b += y;
        }
        long long r = ctx.big.rank(cur);
        int gradeB = static_cast<int>(b % h);
        ctx.L.push_back(r);
        ctx.Lj[gradeB].push_back(r);
        if (gradeB == 0) ctx.K.push_back(r);
    }
    std::sort(ctx.L.begin(), ctx.L.end());
    std::sort(ctx.K.begin(), ctx.K.end());
    for (auto& part : ctx.Lj) std::sort(part.begin(), part.end());
    return ctx;
}

/// Quotient E/K with cosets canonicalized by their rank-minimal member.
struct QuotientGroup {
    Group ambient;
    std::vector<long long> kernel;      // sorted ranks
    std::vector<long long> canon;       // element rank -> canonical rep rank
    std::vector<long long> reps;        // sorted canonical reps; index = coset id
    std::vector<int32_t> repIndex;      // canonical rep rank -> coset id (-1 elsewhere)

    long long order() const { return static_cast<long long>(reps.size()); }

    int32_t coset_of(long long elementRank) const {
        return repIndex[static_cast<std::size_t>(canon[static_cast<std::size_t>(elementRank)])];
    }

    int32_t add(int32_t a, int32_t b) const {
        return coset_of(ambient.add(reps[a], reps[b]));
    }

    int32_t sub(int32_t a, int32_t b) const {
        return coset_of(ambient.sub(reps[a], reps[b]));
    }
};

inline bool is_subgroup(const Group& g, const std::vector<long long>& elems) {
    if (elems.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(g.size), 0);
    for (long long e : elems) {
        if (e < 0 || e >= g.size) return false;
        in[static_cast<std::size_t>(e)] = 1;
    }
    if (!in[0]) return false;
    for (long long a : elems)
        for (long long b : elems)
            if (!in[static_cast<std::size_t>(g.add(a, b))]) return false;
    return true;
}

inline QuotientGroup quotient(const Group& e, const std::vector<long long>& kernel) {
    if (!is_subgroup(e, kernel))
        throw std::invalid_argument("kernel is not a subgroup");
    QuotientGroup q;
    q.ambient = e;
    q.kernel = kernel;
    std::sort(q.kernel.begin(), q.kernel.end());
    q.canon.assign(static_cast<std::size_t>(e.size), -1);
    for (long long x = 0; x < e.size; ++x) {
        if (q.canon[static_cast<std::size_t>(x)] != -1) continue;
        long long mn = x;
        for (long long k : q.kernel) mn = std::min(mn, e.add(x, k));
        for (long long k : q.kernel) q.canon[static_cast<std::size_t>(e.add(x, k))] = mn;
    }
    q.repIndex.assign(static_cast<std::size_t>(e.size), -1);
    for (long long x = 0; x < e.size; ++x)
        if (q.canon[static_cast<std::size_t>(x)] == x) q.reps.push_back(x);
    std::sort(q.reps.begin(), q.reps.end());
    for (std::size_t i = 0; i < q.reps.size(); ++i)
        q.repIndex[static_cast<std::size_t>(q.reps[i])] = static_cast<int32_t>(i);
    return q;
}

} // namespace gpha
