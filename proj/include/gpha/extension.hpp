#pragma once

#include <utility>
#include <vector>

#include "gpha/cocycle.hpp"

namespace gpha {

/// Central extension of <zeta_h> by G determined by a cocycle psi:
/// elements (j, g) with (j,g)(j',g') = (j + j' + psi(g,g'), g + g'),
/// indexed by rank j*|G| + rank(g).
struct ExtGroup {
    Group base;
    int h = 2;
    Cocycle psi;
    long long order = 0;

    long long index(int j, long long gRank) const { return static_cast<long long>(j) * base.size + gRank; }
    int twist(long long e) const { return static_cast<int>(e / base.size); }
    long long shadow(long long e) const { return e % base.size; }

    long long mul(long long a, long long b) const {
        long long ga = shadow(a), gb = shadow(b);
        int j = static_cast<int>((twist(a) + twist(b) + psi.at(ga, gb)) % h);
        return index(j, base.add(ga, gb));
    }

    long long inverse(long long a) const {
        long long ga = shadow(a);
        long long gi = base.neg(ga);
        int j = ((-twist(a) - psi.at(ga, gi)) % h + h) % h;
        return index(j, gi);
    }

    /// a * b^{-1}
    long long div(long long a, long long b) const { return mul(a, inverse(b)); }
};

/// Builds E_psi. The cocycle must be normalized and satisfy the cocycle
/// identity; associativity is re-verified exhaustively at small orders.
inline ExtGroup central_extension(const Cocycle& psi) {
    if (!psi.is_normalized())
        throw std::invalid_argument("central extension requires a normalized cocycle");
    if (!is_cocycle(psi))
        throw std::invalid_argument("table does not satisfy the cocycle identity");
    ExtGroup e;
    e.base = psi.group;
    e.h = psi.h;
    e.psi = psi;
    e.order = detail::checked_mul(psi.group.size, psi.h);
    if (e.order <= 512) {
        for (long long a = 0; a < e.order; ++a)
            for (long long b = 0; b < e.order; ++b)
                for (long long c = 0; c < e.order; ++c)
                    if (e.mul(e.mul(a, b), c) != e.mul(a, e.mul(b, c)))
                        throw internal_error("central extension is not associative");
    }
    return e;
}

/// order of an element, by repeated multiplication
inline long long element_order(const ExtGroup& e, long long a) {
    long long x = a;
    long long n = 1;
    while (x != 0) {
        x = e.mul(x, a);
        ++n;
        if (n > e.order) throw internal_error("element order exceeded the group order");
    }
    return n;
}

} // namespace gpha
