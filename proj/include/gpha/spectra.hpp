#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "gpha/array.hpp"
#include "gpha/autocorr.hpp"
#include "gpha/cyclotomic.hpp"
#include "gpha/matrix.hpp"

namespace gpha {

/// Exact squared-modulus spectrum of an array on a homogeneous domain
/// Z_q^m: power[v] = |sum_x zeta_h^{f(x)} zeta_q^{-v.x}|^2 in Z[zeta_N],
/// N = lcm(h, q).  Values need not be rational integers for arbitrary
/// arrays; they are for every object this library certifies.
struct Spectrum {
    Group domain;
    int h = 2;
    int q = 2;
    int N = 2;
    std::vector<CycInt> power;

    std::vector<long long> support() const {
        std::vector<long long> f;
        for (long long v = 0; v < static_cast<long long>(power.size()); ++v)
            if (!power[static_cast<std::size_t>(v)].is_zero()) f.push_back(v);
        return f;
    }

    /// all squared moduli as rational integers; nullopt if any is not one
    std::optional<std::vector<long long>> integer_values() const {
        std::vector<long long> out;
        out.reserve(power.size());
        for (const CycInt& p : power) {
            auto n = p.as_integer();
            if (!n) return std::nullopt;
            out.push_back(*n);
        }
        return out;
    }
};

namespace detail {

inline int homogeneous_order(const Group& g) {
    if (g.arity() == 0) throw std::invalid_argument("domain must have at least one coordinate");
    int q = g.orders[0];
    for (int s : g.orders)
        if (s != q) throw std::invalid_argument("domain is not homogeneous");
    return q;
}

inline void walsh_fill_generic(const ExponentArray& f, Spectrum& sp) {
    const Group& g = f.group;
    const long long n = g.size;
    const int q = sp.q, N = sp.N, h = f.h;
    const int fh = N / h, fq = N / q;
    const std::size_t m = g.arity();
    std::vector<int> dotc; // dotc[i][a] = v_i * a mod q
    std::vector<std::size_t> base(m);
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            base[i] = total;
            total += static_cast<std::size_t>(q);
        }
        dotc.assign(total, 0);
    }
    std::vector<long long> cnt(static_cast<std::size_t>(N));
    Coords vc(m), xc(m);
    for (long long v = 0; v < n; ++v) {
        vc = g.unrank(v);
        for (std::size_t i = 0; i < m; ++i)
            for (int a = 0; a < q; ++a) dotc[base[i] + a] = (vc[i] * a) % q;
        std::fill(cnt.begin(), cnt.end(), 0);
        std::fill(xc.begin(), xc.end(), 0);
        int dot = 0;
        for (long long x = 0;;) {
            int e = f.at(x) * fh - dot * fq;
            e %= N;
            if (e < 0) e += N;
            ++cnt[static_cast<std::size_t>(e)];
            std::size_t i = m;
            bool done = true;
            while (i > 0) {
                --i;
                dot -= dotc[base[i] + xc[i]];
                if (dot < 0) dot += q;
                if (++xc[i] < q) {
                    dot = (dot + dotc[base[i] + xc[i]]) % q;
                    done = false;
                    break;
                }
                xc[i] = 0;
            }
            if (done) break;
            ++x;
        }
        sp.power[static_cast<std::size_t>(v)] = norm_squared(CycInt(N, cnt));
    }
}

// Large domains: factor the rank as hi*B + lo and transform in two
// stages, still exact.
inline void walsh_fill_split(const ExponentArray& f, Spectrum& sp) {
    const Group& g = f.group;
    const long long n = g.size;
    const int q = sp.q, N = sp.N, h = f.h;
    const int fh = N / h, fq = N / q;
    const std::size_t m = g.arity();

    std::size_t cut = m;
    long long B = 1;
    while (cut > 0 && B * B < n) B *= g.orders[--cut];
    const long long A = n / B;
    const std::size_t hiArity = cut, loArity = m - cut;
    if (q > 255 || A * B * N > (1LL << 26) || A * A > (1LL << 26) || B * B > (1LL << 26)) {
        walsh_fill_generic(f, sp); // stage buffers would not fit
        return;
    }

    auto dot_table = [&](long long count, std::size_t arityOff, std::size_t arityLen) {
        // dot[v][x] for the selected coordinate block, mod q
        std::vector<uint8_t> t(static_cast<std::size_t>(count) * count);
        std::vector<int> vs(arityLen);
        for (long long v = 0; v < count; ++v) {
            long long tv = v;
            for (std::size_t i = arityLen; i > 0; --i) {
                vs[i - 1] = static_cast<int>(tv % g.orders[arityOff + i - 1]);
                tv /= g.orders[arityOff + i - 1];
            }
            for (long long x = 0; x < count; ++x) {
                long long tx = x;
                int acc = 0;
                for (std::size_t i = arityLen; i > 0; --i) {
                    int xi = static_cast<int>(tx % g.orders[arityOff + i - 1]);
                    tx /= g.orders[arityOff + i - 1];
                    acc = (acc + vs[i - 1] * xi) % q;
                }
                t[static_cast<std::size_t>(v) * count + x] = static_cast<uint8_t>(acc);
            }
        }
        return t;
    };
    std::vector<uint8_t> hiDot = dot_table(A, 0, hiArity);
    std::vector<uint8_t> loDot = dot_table(B, cut, loArity);

    // stage 1: T[xhi][vlo] = sum_xlo zeta_N^{f(x)*fh - fq*(vlo.xlo)}
    std::vector<long long> T(static_cast<std::size_t>(A) * B * N, 0);
    for (long long xhi = 0; xhi < A; ++xhi) {
        const int* row = &f.values[static_cast<std::size_t>(xhi) * B];
        for (long long vlo = 0; vlo < B; ++vlo) {
            long long* out = &T[(static_cast<std::size_t>(xhi) * B + vlo) * N];
            const uint8_t* d = &loDot[static_cast<std::size_t>(vlo) * B];
            for (long long xlo = 0; xlo < B; ++xlo) {
                int e = row[xlo] * fh - d[xlo] * fq;
                e %= N;
                if (e < 0) e += N;
                ++out[e];
            }
        }
    }

    // stage 2: W(v) = sum_xhi rot(T[xhi][vlo], -fq*(vhi.xhi))
    std::vector<long long> w(static_cast<std::size_t>(N));
    for (long long vhi = 0; vhi < A; ++vhi) {
        const uint8_t* d = &hiDot[static_cast<std::size_t>(vhi) * A];
        for (long long vlo = 0; vlo < B; ++vlo) {
            std::fill(w.begin(), w.end(), 0);
            for (long long xhi = 0; xhi < A; ++xhi) {
                const long long* src = &T[(static_cast<std::size_t>(xhi) * B + vlo) * N];
                int rot = (N - d[xhi] * fq % N) % N;
                for (int e = 0; e < N; ++e) {
                    int t = e + rot;
                    if (t >= N) t -= N;
                    w[static_cast<std::size_t>(t)] += src[e];
                }
            }
            sp.power[static_cast<std::size_t>(vhi * B + vlo)] = norm_squared(CycInt(N, w));
        }
    }
}

} // namespace detail

/// Generalized transform of f over Z_q^m, all frequencies, exact.
inline Spectrum walsh_spectrum(const ExponentArray& f, int q) {
    if (detail::homogeneous_order(f.group) != q)
        throw std::invalid_argument("stated q does not match the domain");
    Spectrum sp;
    sp.domain = f.group;
    sp.h = f.h;
    sp.q = q;
    sp.N = static_cast<int>(std::lcm(f.h, q));
    sp.power.assign(static_cast<std::size_t>(f.group.size), CycInt(sp.N));
    if (f.group.size > 4096 && f.group.arity() >= 2)
        detail::walsh_fill_split(f, sp);
    else
        detail::walsh_fill_generic(f, sp);
    return sp;
}

/// Generalized bentness: every squared modulus equals q^m exactly.
inline bool is_gbf(const ExponentArray& f, int q) {
    Spectrum sp = walsh_spectrum(f, q);
    for (const CycInt& p : sp.power)
        if (!equals_integer(p, f.group.size)) return false;
    return true;
}

struct PlateauReport {
    bool plateaued = false;
    std::optional<long long> alpha;       // the single nonzero value, when rational
    std::vector<long long> support;       // frequency ranks with nonzero power
    std::optional<long long> s_index;     // alpha = h^{m + s} for prime h
};

/// Plateaued classification: the nonzero squared moduli must all be equal.
inline PlateauReport classify_plateaued(const ExponentArray& f, int q) {
    Spectrum sp = walsh_spectrum(f, q);
    PlateauReport rep;
    rep.support = sp.support();
    rep.plateaued = true;
    const CycInt* first = nullptr;
    for (long long v : rep.support) {
        const CycInt& p = sp.power[static_cast<std::size_t>(v)];
        if (!first) {
            first = &p;
        } else if (!(*first == p)) {
            rep.plateaued = false;
            break;
        }
    }
    if (rep.plateaued && first) {
        rep.alpha = first->as_integer();
        if (rep.alpha && CycInt::is_prime(f.h)) {
            long long a = *rep.alpha;
            long long t = 0;
            while (a % f.h == 0) { a /= f.h; ++t; }
            if (a == 1 && t >= static_cast<long long>(f.group.arity()))
                rep.s_index = t - static_cast<long long>(f.group.arity());
        }
    }
    return rep;
}

/// m-th Kronecker power of the q x q Fourier matrix in logarithmic form:
/// entry (i, j) is alpha_i . alpha_j mod q.
inline ExpMatrix fourier_kronecker(int q, int m, long long bound = 4096) {
    if (q < 2 || m < 1) throw std::invalid_argument("need q >= 2 and m >= 1");
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n = detail::checked_mul(n, q);
        if (n > bound) throw budget_exceeded("fourier_kronecker order exceeds the bound");
    }
    Group g(std::vector<int>(static_cast<std::size_t>(m), q));
    ExpMatrix d(n, q);
    Coords a, b;
    for (long long i = 0; i < n; ++i) {
        a = g.unrank(i);
        for (long long j = 0; j < n; ++j) {
            b = g.unrank(j);
            int acc = 0;
            for (int t = 0; t < m; ++t) acc = (acc + a[static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(t)]) % q;
            d.at(i, j) = acc;
        }
    }
    return d;
}

/// The transform relation: the AC row vector times the Kronecker Fourier
/// matrix equals the squared-modulus spectrum, entry by entry, exactly.
inline bool dft_relation_check(const ExponentArray& phi, int q) {
    if (detail::homogeneous_order(phi.group) != q)
        throw std::invalid_argument("stated q does not match the domain");
    const long long n = phi.group.size;
    const int m = static_cast<int>(phi.group.arity());
    const int N = static_cast<int>(std::lcm(phi.h, q));
    const int fq = N / q;

    AcTable act = ac_table(phi);
    std::vector<CycInt> ac(static_cast<std::size_t>(n), CycInt(N));
    for (long long w = 0; w < n; ++w)
        ac[static_cast<std::size_t>(w)] = embed(act.value(w), N);

    ExpMatrix d = fourier_kronecker(q, m, n);
    Spectrum sp = walsh_spectrum(phi, q);

    std::vector<long long> acc(static_cast<std::size_t>(N));
    for (long long j = 0; j < n; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (long long i = 0; i < n; ++i) {
            int rot = d.at(i, j) * fq % N;
            const CycInt& a = ac[static_cast<std::size_t>(i)];
            for (int e = 0; e < N; ++e) {
                int t = e + rot;
                if (t >= N) t -= N;
                acc[static_cast<std::size_t>(t)] =
                    detail::checked_add(acc[static_cast<std::size_t>(t)], a.coeffs[static_cast<std::size_t>(e)]);
            }
        }
        if (!(CycInt(N, acc) == sp.power[static_cast<std::size_t>(j)])) return false;
    }
    return true;
}

/// For type-1 expansions the predicted support is the congruence class
/// F = { v in Z_{hq}^m : v = (1,...,1) mod h }.
inline std::vector<long long> predicted_support(const Group& base, const std::vector<int>& z, int h) {
    for (int zi : z)
        if (zi != 1) throw std::invalid_argument("predicted support requires type all-ones");
    if (z.size() != base.arity())
        throw std::invalid_argument("type vector length must match group arity");
    int q = detail::homogeneous_order(base);
    Group e(std::vector<int>(base.arity(), h * q));
    std::vector<long long> out;
    const std::size_t m = base.arity();
    std::vector<int> idx(m, 0);
    Coords c(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) c[i] = 1 + idx[i] * h;
        out.push_back(e.rank(c));
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
            --i;
            if (++idx[i] < q) { done = false; break; }
            idx[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gpha
