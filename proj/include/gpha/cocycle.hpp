#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gpha/array.hpp"
#include "gpha/cyclotomic.hpp"
#include "gpha/group.hpp"
#include "gpha/matrix.hpp"

namespace gpha {

enum class CocycleKind { MuZ, Coboundary, Product, Imported };

inline const char* to_string(CocycleKind k) {
    switch (k) {
        case CocycleKind::MuZ: return "mu_z";
        case CocycleKind::Coboundary: return "coboundary";
        case CocycleKind::Product: return "product";
        default: return "imported";
    }
}

/// Two-cocycle over a finite abelian group with coefficients in the h-th
/// roots of unity, stored as the full |G| x |G| exponent table.
struct Cocycle {
    Group group;
    int h = 2;
    std::vector<int> table; // |G| * |G| exponents in [0, h)
    CocycleKind kind = CocycleKind::Imported;

    Cocycle() = default;

    Cocycle(Group g, int modulus, CocycleKind k)
        : group(std::move(g)),
          h(modulus),
          table(static_cast<std::size_t>(group.size) * group.size, 0),
          kind(k) {
        if (h < 2) throw std::invalid_argument("cocycle modulus must be >= 2");
    }

    int at(long long a, long long b) const {
        return table[static_cast<std::size_t>(a) * group.size + b];
    }

    int& at(long long a, long long b) {
        return table[static_cast<std::size_t>(a) * group.size + b];
    }

    bool is_normalized() const {
        for (long long x = 0; x < group.size; ++x)
            if (at(0, x) != 0 || at(x, 0) != 0) return false;
        return true;
    }
};

/// The coboundary of phi in exponent form:
/// (del phi)(a, b) = phi(a+b) - phi(a) - phi(b)  (mod h),
/// after normalizing phi so that phi(0) = 0.
inline Cocycle coboundary(const ExponentArray& phiIn) {
    ExponentArray phi = phiIn.normalized();
    Cocycle c(phi.group, phi.h, CocycleKind::Coboundary);
    const Group& g = phi.group;
    for (long long a = 0; a < g.size; ++a)
        for (long long b = 0; b < g.size; ++b) {
            int v = phi.at(g.add(a, b)) - phi.at(a) - phi.at(b);
            c.at(a, b) = ((v % phi.h) + phi.h) % phi.h;
        }
    return c;
}

/// mu_z(x, y) = sum over marked coordinates of floor((x_i + y_i) / s_i),
/// modulo h. The factor for one coordinate is the cyclic carry cocycle
/// gamma_t(j, k) = zeta_h^{floor((j+k)/t)}.
inline Cocycle mu_z(const Group& base, const std::vector<int>& z, int h) {
    if (z.size() != base.arity())
        throw std::invalid_argument("type vector length must match group arity");
    Cocycle c(base, h, CocycleKind::MuZ);
    Coords xa, xb;
    for (long long a = 0; a < base.size; ++a) {
        xa = base.unrank(a);
        for (long long b = 0; b < base.size; ++b) {
            xb = base.unrank(b);
            long long carry = 0;
            for (std::size_t i = 0; i < z.size(); ++i)
                if (z[i] == 1) carry += (xa[i] + xb[i]) / base.orders[i];
            c.at(a, b) = static_cast<int>(carry % h);
        }
    }
    return c;
}

/// Exhaustive check of the cocycle identity
/// psi(a,b) psi(a+b,c) = psi(a,b+c) psi(b,c) over all triples.
inline bool is_cocycle(const Cocycle& c) {
    const Group& g = c.group;
    std::vector<int32_t> add = addition_table(g);
    const long long n = g.size;
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            long long ab = add[static_cast<std::size_t>(a) * n + b];
            for (long long x = 0; x < n; ++x) {
                long long bx = add[static_cast<std::size_t>(b) * n + x];
                int lhs = c.at(a, b) + c.at(ab, x);
                int rhs = c.at(a, bx) + c.at(b, x);
                if ((lhs - rhs) % c.h != 0) return false;
            }
        }
    return true;
}

/// Pointwise product (exponent sum).
inline Cocycle cocycle_product(const Cocycle& a, const Cocycle& b) {
    if (!(a.group == b.group) || a.h != b.h)
        throw std::invalid_argument("cocycle product requires equal groups and moduli");
    Cocycle c(a.group, a.h, CocycleKind::Product);
    for (std::size_t i = 0; i < c.table.size(); ++i) {
        int v = a.table[i] + b.table[i];
        if (v >= a.h) v -= a.h;
        c.table[i] = v;
    }
    return c;
}

inline ExpMatrix cocyclic_matrix(const Cocycle& c) {
    ExpMatrix m(c.group.size, c.h);
    for (std::size_t i = 0; i < c.table.size(); ++i) m.entries[i] = c.table[i];
    return m;
}

/// mu_z is a coboundary exactly when every marked order is coprime to h.
inline bool mu_z_is_coboundary(const Group& base, const std::vector<int>& z, int h) {
    if (z.size() != base.arity())
        throw std::invalid_argument("type vector length must match group arity");
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] == 1 && std::gcd(base.orders[i], h) != 1) return false;
    return true;
}

/// Necessary condition on n for BH(n, k) to be non-empty: n must be a
/// non-negative integer combination of the primes dividing k.
inline bool butson_order_constraint(long long n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("need n >= 1 and k >= 2");
    std::vector<int> primes;
    int kk = k;
    for (int p = 2; p <= kk; ++p)
        if (kk % p == 0) {
            primes.push_back(p);
            while (kk % p == 0) kk /= p;
        }
    std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (int p : primes)
        for (long long v = p; v <= n; ++v)
            if (reach[static_cast<std::size_t>(v - p)]) reach[static_cast<std::size_t>(v)] = 1;
    return reach[static_cast<std::size_t>(n)] != 0;
}

namespace detail {

// existence of u, v with u^2 + e*u*v + v^2 = n and |weights| realizable:
// helper for the quadratic cyclotomic cases k in {3, 4, 6}.
inline bool sum_of_two_squares(long long n) {
    for (long long a = 0; a * a <= n; ++a) {
        long long b2 = n - a * a;
        long long b = static_cast<long long>(std::sqrt(static_cast<double>(b2)));
        while (b * b > b2) --b;
        while ((b + 1) * (b + 1) <= b2) ++b;
        if (b * b == b2) return true;
    }
    return false;
}

inline bool is_perfect_square(long long n) {
    if (n < 0) return false;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

} // namespace detail

/// Screen for Butson matrices with constant row and column sums: do
/// multiplicities x_0..x_{k-1} summing to n exist whose root-of-unity
/// combination has squared modulus exactly n?  Decided by integer
/// reasoning for k in {2,3,4,6}; by bounded enumeration of compositions
/// otherwise; refuses when past the configured bounds.
inline bool row_sum_feasibility(long long n, int k, long long nBound = 64, int kBound = 12) {
    if (n < 1 || k < 2) throw std::invalid_argument("need n >= 1 and k >= 2");
    if (n > nBound || k > kBound)
        throw budget_exceeded("row-sum screen refuses past n <= " + std::to_string(nBound) +
                              ", k <= " + std::to_string(kBound));

    if (k == 2) return detail::is_perfect_square(n);
    if (k == 4) return detail::sum_of_two_squares(n);
    if (k == 3) {
        // value = u + v*zeta_3 with u = x0-x2, v = x1-x2; |.|^2 = u^2-uv+v^2
        for (long long u = -n; u <= n; ++u)
            for (long long v = -n; v <= n; ++v) {
                if (u * u - u * v + v * v != n) continue;
                long long lo = std::max({0LL, -u, -v});
                long long rem = n - u - v - 3 * lo;
                if (rem >= 0 && rem % 3 == 0) return true;
            }
        return false;
    }
    if (k == 6) {
        // pair opposite roots: a = x0-x3, b = x1-x4, c = x2-x5;
        // value = (a-c) + (b+c)*zeta_6, |.|^2 = u^2+uv+v^2
        for (long long a = -n; a <= n; ++a)
            for (long long b = -n; b <= n; ++b)
                for (long long c = -n; c <= n; ++c) {
                    if (std::abs(a) + std::abs(b) + std::abs(c) > n) continue;
                    if ((n - std::abs(a) - std::abs(b) - std::abs(c)) % 2 != 0) continue;
                    long long u = a - c, v = b + c;
                    if (u * u + u * v + v * v == n) return true;
                }
        return false;
    }

    // generic small case: enumerate compositions of n into k parts
    long long combos = 1;
    for (int i = 1; i < k; ++i) {
        combos = combos * (n + i) / i;
        if (combos > (1LL << 22))
            throw budget_exceeded("row-sum screen: composition count for n=" + std::to_string(n) +
                                  ", k=" + std::to_string(k) + " exceeds the enumeration budget");
    }
    std::vector<long long> x(static_cast<std::size_t>(k), 0);
    std::vector<long long> conv(static_cast<std::size_t>(k), 0);
    // depth-first over x_0..x_{k-2}, x_{k-1} = remainder
    std::vector<long long> rem(static_cast<std::size_t>(k), 0);
    long long depth = 0;
    x[0] = -1;
    rem[0] = n;
    while (depth >= 0) {
        ++x[static_cast<std::size_t>(depth)];
        if (x[static_cast<std::size_t>(depth)] > rem[static_cast<std::size_t>(depth)]) {
            --depth;
            continue;
        }
        if (depth == k - 2) {
            x[static_cast<std::size_t>(k - 1)] =
                rem[static_cast<std::size_t>(depth)] - x[static_cast<std::size_t>(depth)];
            std::fill(conv.begin(), conv.end(), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    int d = i - j;
                    if (d < 0) d += k;
                    conv[static_cast<std::size_t>(d)] += x[static_cast<std::size_t>(i)] *
                                                         x[static_cast<std::size_t>(j)];
                }
            if (equals_integer(CycInt(k, conv), n)) return true;
        } else {
            rem[static_cast<std::size_t>(depth + 1)] =
                rem[static_cast<std::size_t>(depth)] - x[static_cast<std::size_t>(depth)];
            ++depth;
            x[static_cast<std::size_t>(depth)] = -1;
        }
    }
    return false;
}

} // namespace gpha
