#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gpha/autocorr.hpp"
#include "gpha/cocycle.hpp"
#include "gpha/extension.hpp"
#include "gpha/group.hpp"

namespace gpha {

/// The group a difference set lives in: a plain abelian group, a quotient
/// E/K, or a central extension E_psi. Elements are ids in [0, order).
struct Ambient {
    enum class Kind { Plain, Quotient, Extension };
    Kind kind = Kind::Plain;
    Group plain;
    QuotientGroup quot;
    ExtGroup ext;

    static Ambient of(Group g) {
        Ambient a;
        a.kind = Kind::Plain;
        a.plain = std::move(g);
        return a;
    }
    static Ambient of(QuotientGroup q) {
        Ambient a;
        a.kind = Kind::Quotient;
        a.quot = std::move(q);
        return a;
    }
    static Ambient of(ExtGroup e) {
        Ambient a;
        a.kind = Kind::Extension;
        a.ext = std::move(e);
        return a;
    }

    long long order() const {
        switch (kind) {
            case Kind::Plain: return plain.size;
            case Kind::Quotient: return quot.order();
            default: return ext.order;
        }
    }

    /// difference a - b (written multiplicatively, a b^{-1})
    long long diff(long long a, long long b) const {
        switch (kind) {
            case Kind::Plain: return plain.sub(a, b);
            case Kind::Quotient: return quot.sub(static_cast<int32_t>(a), static_cast<int32_t>(b));
            default: return ext.div(a, b);
        }
    }
};

struct RdsParams {
    long long v = 0;      // index |E : N|
    long long n = 0;      // order of the forbidden subgroup
    long long k = 0;      // size of the set
    long long lambda = 0; // valid only when lambda_integral
    bool lambda_integral = true;
};

struct Rds {
    Ambient ambient;
    std::vector<long long> forbidden; // element ids, identity included
    std::vector<long long> members;   // element ids
    RdsParams params;
    std::vector<std::string> warnings;
    bool theorem_guarantee = true; // false when hypotheses (prime h, ...) fail
};

/// Exact verification by counting the full difference multiset: every
/// element outside the forbidden subgroup must occur exactly lambda
/// times, every non-identity element inside it zero times.
inline bool verify_rds(const Rds& r) {
    const long long order = r.ambient.order();
    for (long long m : r.members)
        if (m < 0 || m >= order) throw std::invalid_argument("member outside the ambient group");
    if (!r.params.lambda_integral) return false;
    if (static_cast<long long>(r.members.size()) != r.params.k) return false;
    {
        std::vector<long long> s(r.members);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    }
    std::vector<long long> cnt(static_cast<std::size_t>(order), 0);
    for (long long a : r.members)
        for (long long b : r.members)
            if (a != b) ++cnt[static_cast<std::size_t>(r.ambient.diff(a, b))];
    std::vector<char> inN(static_cast<std::size_t>(order), 0);
    for (long long f : r.forbidden) inN[static_cast<std::size_t>(f)] = 1;
    for (long long d = 0; d < order; ++d) {
        if (inN[static_cast<std::size_t>(d)]) {
            if (cnt[static_cast<std::size_t>(d)] != 0) return false;
        } else if (cnt[static_cast<std::size_t>(d)] != r.params.lambda) {
            return false;
        }
    }
    return true;
}

/// R = { g + K : phi'(g) = 0 (mod h) } in E/K, forbidden subgroup L/K,
/// expected parameters (v, h, v, v/h) with v = |G|.
inline Rds rds_from_expansion(const ExponentArray& phiIn, const std::vector<int>& z) {
    bool allZero = true;
    for (int zi : z)
        if (zi != 0) allZero = false;
    if (allZero) throw std::invalid_argument("expansion difference set requires type z != 0");

    ExponentArray phi = phiIn.normalized();
    ExpansionContext ctx = expansion_context(phi.group, z, phi.h);
    ExponentArray ep = expand(phi, z);
    QuotientGroup q = quotient(ctx.big, ctx.K);

    Rds r;
    r.params.v = phi.group.size;
    r.params.n = phi.h;
    r.params.k = phi.group.size;
    r.params.lambda_integral = (phi.group.size % phi.h) == 0;
    r.params.lambda = r.params.lambda_integral ? phi.group.size / phi.h : 0;
    if (!CycInt::is_prime(phi.h)) {
        r.warnings.push_back("modulus h is not prime; the equivalence theorem does not apply");
        r.theorem_guarantee = false;
    }
    if (!r.params.lambda_integral) {
        r.warnings.push_back("h does not divide |G|; parameters are not integral");
        r.theorem_guarantee = false;
    }

    // phi' is constant on cosets of K, so reading it at the canonical rep
    // is well-defined
    std::vector<char> isForbidden(static_cast<std::size_t>(q.order()), 0);
    for (long long l : ctx.L) {
        int32_t c = q.coset_of(l);
        if (!isForbidden[static_cast<std::size_t>(c)]) {
            isForbidden[static_cast<std::size_t>(c)] = 1;
            r.forbidden.push_back(c);
        }
    }
    for (long long c = 0; c < q.order(); ++c)
        if (ep.at(q.reps[static_cast<std::size_t>(c)]) == 0) r.members.push_back(c);
    std::sort(r.forbidden.begin(), r.forbidden.end());
    r.ambient = Ambient::of(std::move(q));
    return r;
}

/// The splitting set { (f(x), x) } in Z_h x Z_q^m with forbidden subgroup
/// Z_h x {0}; parameters (q^m, h, q^m, q^m/h).
inline Rds splitting_rds(const ExponentArray& f) {
    std::vector<int> orders;
    orders.push_back(f.h);
    orders.insert(orders.end(), f.group.orders.begin(), f.group.orders.end());
    Group product(orders);

    Rds r;
    r.params.v = f.group.size;
    r.params.n = f.h;
    r.params.k = f.group.size;
    r.params.lambda_integral = (f.group.size % f.h) == 0;
    r.params.lambda = r.params.lambda_integral ? f.group.size / f.h : 0;
    if (!CycInt::is_prime(f.h) || !r.params.lambda_integral) {
        r.warnings.push_back("splitting construction is only guaranteed for prime h dividing |G|");
        r.theorem_guarantee = false;
    }
    for (int j = 0; j < f.h; ++j) r.forbidden.push_back(static_cast<long long>(j) * f.group.size);
    for (long long x = 0; x < f.group.size; ++x)
        r.members.push_back(static_cast<long long>(f.at(x)) * f.group.size + x);
    r.ambient = Ambient::of(std::move(product));
    return r;
}

/// The transversal { (1, x) } in the central extension E_psi with
/// forbidden subgroup <(zeta_h, 1)>; a (|G|, h, |G|, |G|/h) difference
/// set exactly when psi is orthogonal.
inline Rds ext_rds(const Cocycle& psi) {
    if (!CycInt::is_prime(psi.h))
        throw std::invalid_argument("extension difference set criterion requires prime h");
    ExtGroup e = central_extension(psi);

    Rds r;
    r.params.v = psi.group.size;
    r.params.n = psi.h;
    r.params.k = psi.group.size;
    r.params.lambda_integral = (psi.group.size % psi.h) == 0;
    r.params.lambda = r.params.lambda_integral ? psi.group.size / psi.h : 0;
    if (!r.params.lambda_integral) {
        r.warnings.push_back("h does not divide |G|; parameters are not integral");
        r.theorem_guarantee = false;
    }
    for (int j = 0; j < psi.h; ++j) r.forbidden.push_back(e.index(j, 0));
    for (long long x = 0; x < psi.group.size; ++x) r.members.push_back(e.index(0, x));
    r.ambient = Ambient::of(std::move(e));
    return r;
}

inline bool ext_rds_check(const Cocycle& psi) { return verify_rds(ext_rds(psi)); }

/// The explicit equivalence of extensions behind the mu_z construction:
/// Gamma (u, x) = iota(u phi(x)^{-1}) + tau(x), from E_psi onto E/K for
/// psi = mu_z del phi.
struct GammaReport {
    bool is_homomorphism = false;
    bool bijective = false;
    bool diagram_commutes = false;
    bool transversal_image_is_level_set = false;
    std::vector<long long> image; // coset id per element of E_psi

    bool all() const {
        return is_homomorphism && bijective && diagram_commutes && transversal_image_is_level_set;
    }
};

inline GammaReport gamma_iso(const ExponentArray& phiIn, const std::vector<int>& z) {
    bool allZero = true;
    for (int zi : z)
        if (zi != 0) allZero = false;
    if (allZero) throw std::invalid_argument("gamma map requires type z != 0");

    ExponentArray phi = phiIn.normalized();
    const Group& g = phi.group;
    const int h = phi.h;
    ExpansionContext ctx = expansion_context(g, z, h);
    ExponentArray ep = expand(phi, z);
    QuotientGroup q = quotient(ctx.big, ctx.K);
    Cocycle psi = cocycle_product(mu_z(g, z, h), coboundary(phi));
    ExtGroup e = central_extension(psi);

    // iota sends zeta_h to y + K for y = s_i in the first marked slot
    std::size_t slot = 0;
    while (slot < z.size() && z[slot] == 0) ++slot;
    Coords yc(g.arity(), 0);
    yc[slot] = g.orders[slot];
    const long long yRank = ctx.big.rank(yc);

    auto lift = [&](long long xRank) {
        // G -> E with the same coordinates
        Coords c = g.unrank(xRank);
        return ctx.big.rank(c);
    };

    GammaReport rep;
    rep.image.assign(static_cast<std::size_t>(e.order), -1);
    for (long long a = 0; a < e.order; ++a) {
        int j = e.twist(a);
        long long x = e.shadow(a);
        int t = ((j - phi.at(x)) % h + h) % h;
        long long target = lift(x);
        for (int s = 0; s < t; ++s) target = ctx.big.add(target, yRank);
        rep.image[static_cast<std::size_t>(a)] = q.coset_of(target);
    }

    rep.is_homomorphism = true;
    for (long long a = 0; a < e.order && rep.is_homomorphism; ++a)
        for (long long b = 0; b < e.order; ++b) {
            int32_t lhs = static_cast<int32_t>(rep.image[static_cast<std::size_t>(e.mul(a, b))]);
            int32_t rhs = q.add(static_cast<int32_t>(rep.image[static_cast<std::size_t>(a)]),
                                static_cast<int32_t>(rep.image[static_cast<std::size_t>(b)]));
            if (lhs != rhs) { rep.is_homomorphism = false; break; }
        }

    {
        std::vector<long long> img(rep.image);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        rep.bijective = static_cast<long long>(img.size()) == q.order();
    }

    rep.diagram_commutes = true;
    for (long long a = 0; a < e.order; ++a) {
        long long coset = rep.image[static_cast<std::size_t>(a)];
        Coords c = ctx.big.unrank(q.reps[static_cast<std::size_t>(coset)]);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] %= g.orders[i];
        if (g.rank(c) != e.shadow(a)) { rep.diagram_commutes = false; break; }
    }

    {
        std::vector<long long> lhs;
        for (long long x = 0; x < g.size; ++x)
            lhs.push_back(rep.image[static_cast<std::size_t>(e.index(0, x))]);
        std::sort(lhs.begin(), lhs.end());
        std::vector<long long> rhs;
        for (long long c = 0; c < q.order(); ++c)
            if (ep.at(q.reps[static_cast<std::size_t>(c)]) == 0) rhs.push_back(c);
        rep.transversal_image_is_level_set = lhs == rhs;
    }
    return rep;
}

} // namespace gpha
