#pragma once

#include <algorithm>
#include <vector>

#include "gpha/array.hpp"
#include "gpha/cyclotomic.hpp"
#include "gpha/group.hpp"

namespace gpha {

/// Per-shift periodic autocorrelation values, kept as the h bucket counts
/// cnt[d] = #{ g : phi(g) - phi(g+w) = d (mod h) }, so that
/// AC(w) = sum_d cnt[d] zeta_h^d exactly.
struct AcTable {
    Group group;
    int h = 2;
    std::vector<long long> counts; // n * h, row per shift

    long long shifts() const { return group.size; }

    CycInt value(long long w) const {
        CycInt a(h);
        for (int d = 0; d < h; ++d)
            a.coeffs[d] = counts[static_cast<std::size_t>(w) * h + d];
        return a;
    }

    bool value_is_zero(long long w) const {
        return value(w).is_zero();
    }
};

namespace detail {

// Plain path: per shift, walk the group once with per-coordinate offset
// tables for g -> g + w.
inline void ac_fill_generic(const ExponentArray& phi, AcTable& t) {
    const Group& g = phi.group;
    const long long n = g.size;
    const int h = phi.h;
    const std::size_t m = g.arity();
    std::vector<long long> offs; // offs[i][a] = ((a + w_i) mod s_i) * stride_i
    std::vector<std::size_t> base(m);
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            base[i] = total;
            total += static_cast<std::size_t>(g.orders[i]);
        }
        offs.assign(total, 0);
    }
    Coords wc(m), gc(m);
    const int* val = phi.values.data();
    for (long long w = 0; w < n; ++w) {
        wc = g.unrank(w);
        for (std::size_t i = 0; i < m; ++i)
            for (int a = 0; a < g.orders[i]; ++a)
                offs[base[i] + a] = static_cast<long long>((a + wc[i]) % g.orders[i]) * g.strides[i];
        long long* cnt = &t.counts[static_cast<std::size_t>(w) * h];
        std::fill(gc.begin(), gc.end(), 0);
        long long gpw = 0;
        for (std::size_t i = 0; i < m; ++i) gpw += offs[base[i]];
        for (long long r = 0;;) {
            int d = val[r] - val[gpw];
            if (d < 0) d += h;
            ++cnt[d];
            // odometer increment, updating rank(g + w) per coordinate
            std::size_t i = m;
            bool done = true;
            while (i > 0) {
                --i;
                gpw -= offs[base[i] + gc[i]];
                if (++gc[i] < g.orders[i]) {
                    gpw += offs[base[i] + gc[i]];
                    done = false;
                    break;
                }
                gc[i] = 0;
                gpw += offs[base[i]];
            }
            if (done) break;
            ++r;
        }
    }
}

// Binary fast path: split the coordinates in two halves so the rank
// factors as hi*B + lo, precompute shifted copies of each lo-row, and
// count mismatches over contiguous byte runs.
inline void ac_fill_binary_split(const ExponentArray& phi, AcTable& t) {
    const Group& g = phi.group;
    const long long n = g.size;
    const std::size_t m = g.arity();

    std::size_t cut = m;
    long long B = 1;
    while (cut > 0 && B * B < n) B *= g.orders[--cut];
    const long long A = n / B;
    if (n * B > (1LL << 28) || A * A > (1LL << 26)) { // shifted-copy buffer too large
        ac_fill_generic(phi, t);
        return;
    }

    Group hiG(std::vector<int>(g.orders.begin(), g.orders.begin() + cut));
    Group loG(std::vector<int>(g.orders.begin() + cut, g.orders.end()));

    std::vector<int32_t> hiAdd = addition_table(hiG);
    std::vector<int32_t> loAdd = addition_table(loG);

    std::vector<uint8_t> vals(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) vals[i] = static_cast<uint8_t>(phi.values[i]);

    // shifted[r*B*B + wlo*B + glo] = vals[r*B + (glo + wlo)]
    std::vector<uint8_t> shifted(static_cast<std::size_t>(A) * B * B);
    for (long long r = 0; r < A; ++r) {
        const uint8_t* row = &vals[static_cast<std::size_t>(r) * B];
        for (long long wlo = 0; wlo < B; ++wlo) {
            uint8_t* out = &shifted[(static_cast<std::size_t>(r) * B + wlo) * B];
            const int32_t* perm = &loAdd[static_cast<std::size_t>(wlo) * B];
            for (long long glo = 0; glo < B; ++glo) out[glo] = row[perm[glo]];
        }
    }

    for (long long whi = 0; whi < A; ++whi) {
        std::vector<long long> mm(static_cast<std::size_t>(B), 0);
        for (long long ghi = 0; ghi < A; ++ghi) {
            const uint8_t* r1 = &vals[static_cast<std::size_t>(ghi) * B];
            const long long r2 = hiAdd[static_cast<std::size_t>(ghi) * A + whi];
            const uint8_t* pr = &shifted[static_cast<std::size_t>(r2) * B * B];
            for (long long wlo = 0; wlo < B; ++wlo) {
                const uint8_t* p = pr + wlo * B;
                long long acc = 0;
                for (long long glo = 0; glo < B; ++glo) acc += r1[glo] ^ p[glo];
                mm[wlo] += acc;
            }
        }
        for (long long wlo = 0; wlo < B; ++wlo) {
            long long w = whi * B + wlo;
            t.counts[static_cast<std::size_t>(w) * 2 + 0] = n - mm[wlo];
            t.counts[static_cast<std::size_t>(w) * 2 + 1] = mm[wlo];
        }
    }
}

} // namespace detail

inline AcTable ac_table(const ExponentArray& phi) {
    AcTable t;
    t.group = phi.group;
    t.h = phi.h;
    t.counts.assign(static_cast<std::size_t>(phi.group.size) * phi.h, 0);
    const long long n = phi.group.size;
    if (phi.h == 2 && n >= 2048 && phi.group.arity() >= 2)
        detail::ac_fill_binary_split(phi, t);
    else
        detail::ac_fill_generic(phi, t);
    return t;
}

/// AC_phi(w) = sum_g zeta_h^{phi(g) - phi(g+w)}
inline CycInt autocorrelation(const ExponentArray& phi, long long w) {
    const Group& g = phi.group;
    CycInt a(phi.h);
    for (long long r = 0; r < g.size; ++r) {
        int d = phi.at(r) - phi.at(g.add(r, w));
        if (d < 0) d += phi.h;
        ++a.coeffs[d];
    }
    return a;
}

inline bool is_perfect(const ExponentArray& phi) {
    AcTable t = ac_table(phi);
    for (long long w = 1; w < t.shifts(); ++w)
        if (!t.value_is_zero(w)) return false;
    return true;
}

/// Level sets N^i = { g : phi(g) = i }.
inline std::vector<std::vector<long long>> level_sets(const ExponentArray& phi) {
    std::vector<std::vector<long long>> ns(phi.h);
    for (long long r = 0; r < phi.group.size; ++r)
        ns[static_cast<std::size_t>(phi.at(r))].push_back(r);
    return ns;
}

namespace detail {

inline bool gpha_from_ac(const ExpansionContext& ctx, const AcTable& t, int h) {
    std::vector<char> inL(static_cast<std::size_t>(ctx.big.size), 0);
    for (long long l : ctx.L) inL[static_cast<std::size_t>(l)] = 1;
    bool ok = true;
    for (long long w = 0; w < t.shifts(); ++w) {
        if (inL[static_cast<std::size_t>(w)]) {
            CycInt expected = CycInt::root(h, -ctx.grade(w)).scaled(ctx.big.size);
            if (!(t.value(w) == expected))
                throw internal_error("expansion autocorrelation on L deviates from the forced value");
        } else if (ok && !t.value_is_zero(w)) {
            ok = false;
        }
    }
    return ok;
}

inline bool gpbf_from_ac(const AcTable& t) {
    const long long n = t.group.size;
    const long long n2 = checked_mul(n, n);
    for (long long w = 0; w < t.shifts(); ++w) {
        CycInt v = t.value(w);
        if (v.is_zero()) continue;
        if (!equals_integer(norm_squared(v), n2)) return false;
    }
    return true;
}

} // namespace detail

/// Generalized perfection: the expansion of type z has AC exactly zero at
/// every shift outside L. The forced values on L are re-derived as a
/// self-check; a mismatch there is an implementation bug.
inline bool is_gpha(const ExponentArray& phi, const std::vector<int>& z) {
    ExpansionContext ctx = expansion_context(phi.group, z, phi.h);
    ExponentArray ep = expand(phi, z);
    return detail::gpha_from_ac(ctx, ac_table(ep), phi.h);
}

/// Generalized partial bentness: |AC(x)| lies in {0, |domain|} for every x.
inline bool is_gpbf(const ExponentArray& f) {
    return detail::gpbf_from_ac(ac_table(f));
}

/// Sufficient condition separating partial bentness from generalized
/// perfection: for every y != 0 with sum_i y_i = 0 (mod h) there must be
/// an x with  phi(x+y) + sum_i floor((x_i+y_i)/q)  !=  phi(x) + phi(y)
/// modulo h, coordinates added over the integers.
inline bool obstruction_condition_holds(const ExponentArray& phiIn) {
    ExponentArray phi = phiIn.normalized(); // the criterion presumes phi(0) = 0
    const Group& g = phi.group;
    if (g.arity() == 0) return true;
    const int q = g.orders[0];
    for (int s : g.orders)
        if (s != q) throw std::invalid_argument("condition requires a homogeneous domain");
    const int h = phi.h;
    Coords yc(g.arity()), xc(g.arity()), sc(g.arity());
    for (long long y = 1; y < g.size; ++y) {
        yc = g.unrank(y);
        long long ySum = 0;
        for (int v : yc) ySum += v;
        if (ySum % h != 0) continue;
        bool witness = false;
        for (long long x = 0; x < g.size && !witness; ++x) {
            xc = g.unrank(x);
            long long carries = 0;
            for (std::size_t i = 0; i < sc.size(); ++i) {
                int s = xc[i] + yc[i];
                carries += s / q;
                sc[i] = s % q;
            }
            long long lhs = (phi.at(g.rank(sc)) + carries) % h;
            long long rhs = (phi.at(x) + phi.at(y)) % h;
            witness = lhs != rhs;
        }
        if (!witness) return false;
    }
    return true;
}

} // namespace gpha
