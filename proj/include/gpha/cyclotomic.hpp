#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "gpha/errors.hpp"

namespace gpha {

/// Integer polynomial in one variable, dense, lowest degree first.
using IntPoly = std::vector<long long>;

namespace detail {

inline void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division of a by monic b; throws if the division is not exact.
inline IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    if (b.empty() || b.back() != 1)
        throw internal_error("poly_div_exact requires a monic divisor");
    poly_trim(a);
    IntPoly q;
    if (a.size() < b.size()) {
        poly_trim(a);
        if (!a.empty()) throw internal_error("inexact polynomial division");
        return q;
    }
    q.assign(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        long long c = a[i];
        if (c == 0) continue;
        int shift = i - static_cast<int>(b.size()) + 1;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = checked_sub(a[shift + j], checked_mul(c, b[j]));
    }
    for (long long c : a)
        if (c != 0) throw internal_error("inexact polynomial division");
    return q;
}

/// Remainder of a modulo monic b, in place.
inline void poly_mod(IntPoly& a, const IntPoly& b) {
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        long long c = a[i];
        if (c == 0) continue;
        int shift = i - static_cast<int>(b.size()) + 1;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = checked_sub(a[shift + j], checked_mul(c, b[j]));
    }
    a.resize(b.size() - 1);
}

} // namespace detail

/// k-th cyclotomic polynomial, exact, via Phi_k = (x^k - 1) / prod_{d|k, d<k} Phi_d.
inline const IntPoly& cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    // compute bottom-up so recursion never re-enters the lock
    for (int n = 1; n <= k; ++n) {
        if (k % n != 0 || cache.count(n)) continue;
        IntPoly num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        IntPoly acc{1};
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const IntPoly& pd = cache.at(d);
            IntPoly prod(acc.size() + pd.size() - 1, 0);
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (std::size_t j = 0; j < pd.size(); ++j)
                    prod[i + j] = detail::checked_add(prod[i + j], detail::checked_mul(acc[i], pd[j]));
            acc = std::move(prod);
        }
        cache[n] = detail::poly_div_exact(num, acc);
    }
    return cache.at(k);
}

/// Exact element of Z[zeta_k], stored as an integer coefficient vector of
/// length k modulo x^k - 1.  Equality is decided modulo Phi_k.
struct CycInt {
    int order = 1;
    std::vector<long long> coeffs; // coeffs[i] multiplies zeta_k^i

    CycInt() : coeffs(1, 0) {}

    explicit CycInt(int k) : order(k), coeffs(static_cast<std::size_t>(k), 0) {
        if (k < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    }

    CycInt(int k, std::vector<long long> c) : order(k), coeffs(std::move(c)) {
        if (k < 1 || coeffs.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("coefficient vector must have length k");
    }

    static CycInt zero(int k) { return CycInt(k); }

    static CycInt from_integer(int k, long long n) {
        CycInt a(k);
        a.coeffs[0] = n;
        return a;
    }

    /// zeta_k^e (e taken mod k, negatives allowed)
    static CycInt root(int k, long long e) {
        CycInt a(k);
        e %= k;
        if (e < 0) e += k;
        a.coeffs[static_cast<std::size_t>(e)] = 1;
        return a;
    }

    bool same_ring(const CycInt& o) const { return order == o.order; }

    CycInt operator+(const CycInt& o) const {
        require_same(o);
        CycInt r(order);
        for (int i = 0; i < order; ++i)
            r.coeffs[i] = detail::checked_add(coeffs[i], o.coeffs[i]);
        return r;
    }

    CycInt operator-(const CycInt& o) const {
        require_same(o);
        CycInt r(order);
        for (int i = 0; i < order; ++i)
            r.coeffs[i] = detail::checked_sub(coeffs[i], o.coeffs[i]);
        return r;
    }

    CycInt operator*(const CycInt& o) const {
        require_same(o);
        CycInt r(order);
        for (int i = 0; i < order; ++i) {
            if (coeffs[i] == 0) continue;
            for (int j = 0; j < order; ++j) {
                if (o.coeffs[j] == 0) continue;
                int t = i + j;
                if (t >= order) t -= order;
                r.coeffs[t] = detail::checked_add(
                    r.coeffs[t], detail::checked_mul(coeffs[i], o.coeffs[j]));
            }
        }
        return r;
    }

    CycInt scaled(long long n) const {
        CycInt r(order);
        for (int i = 0; i < order; ++i) r.coeffs[i] = detail::checked_mul(coeffs[i], n);
        return r;
    }

    /// complex conjugate: index i -> k - i  (mod k)
    CycInt conj() const {
        CycInt r(order);
        for (int i = 0; i < order; ++i)
            r.coeffs[(order - i) % order] = coeffs[i];
        return r;
    }

    /// canonical residue modulo Phi_k, degree < deg Phi_k
    IntPoly reduced() const {
        IntPoly p = coeffs;
        detail::poly_mod(p, cyclotomic_polynomial(order));
        return p;
    }

    bool is_zero() const {
        if (is_prime(order)) {
            // vanishing-sum criterion: zero iff all coefficients equal
            for (int i = 1; i < order; ++i)
                if (coeffs[i] != coeffs[0]) return false;
            return true;
        }
        for (long long c : reduced())
            if (c != 0) return false;
        return true;
    }

    bool operator==(const CycInt& o) const {
        require_same(o);
        return (*this - o).is_zero();
    }

    /// the value as a rational integer, when it is one
    std::optional<long long> as_integer() const {
        IntPoly p = reduced();
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i] != 0) return std::nullopt;
        return p.empty() ? 0 : p[0];
    }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    void require_same(const CycInt& o) const {
        if (order != o.order)
            throw std::invalid_argument("cyclotomic orders differ; embed explicitly first");
    }
};

inline CycInt cyc_root(int k, long long e) { return CycInt::root(k, e); }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt cyc_conj(const CycInt& a) { return a.conj(); }

/// Z[zeta_k] -> Z[zeta_K] for k | K, sending zeta_k to zeta_K^{K/k}.
inline CycInt embed(const CycInt& a, int bigOrder) {
    if (bigOrder % a.order != 0)
        throw std::invalid_argument("embedding requires the source order to divide the target");
    int f = bigOrder / a.order;
    CycInt r(bigOrder);
    for (int i = 0; i < a.order; ++i)
        r.coeffs[static_cast<std::size_t>(i) * f] = a.coeffs[i];
    return r;
}

/// a * conj(a), exact. Use as_integer() on the result when a rational
/// value is expected.
inline CycInt norm_squared(const CycInt& a) { return a * a.conj(); }

inline bool equals_integer(const CycInt& a, long long n) {
    return (a - CycInt::from_integer(a.order, n)).is_zero();
}

} // namespace gpha
