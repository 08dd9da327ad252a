#pragma once

#include <optional>
#include <vector>

#include "gpha/autocorr.hpp"
#include "gpha/cocycle.hpp"
#include "gpha/rds.hpp"
#include "gpha/spectra.hpp"

namespace gpha {

/// One record with every verdict of the equivalence chain, each computed
/// along its own route (autocorrelation, Butson check, difference set,
/// spectrum), plus the side conditions that tie them together.
struct EquivalenceReport {
    std::vector<int> orders;
    int h = 2;
    std::vector<int> z;
    long long v = 0;
    int normalization_shift = 0; // constant subtracted to normalize the input

    bool gpha = false;
    bool butson = false;
    bool symmetric = false;
    bool rds_ok = false;
    bool gpbf = false;
    bool coboundary_mu = false;
    std::optional<bool> plateaued;         // type all-ones, homogeneous domain
    std::optional<bool> obstruction_holds; // homogeneous domain

    // which equality assertions the theorems actually cover for these
    // parameters
    bool guarantee_triple = false;    // gpha == butson == rds_ok
    bool guarantee_plateaued = false; // ... == plateaued
    bool guarantee_gpbf = false;      // ... == gpbf

    bool primary() const { return gpha; }
};

inline EquivalenceReport equivalence_harness(const ExponentArray& phiIn, const std::vector<int>& z) {
    bool allZero = true, allOnes = true;
    for (int zi : z) {
        if (zi != 0) allZero = false;
        if (zi != 1) allOnes = false;
    }
    if (allZero) throw std::invalid_argument("equivalence harness requires type z != 0");

    ExponentArray phi = phiIn.normalized();
    const Group& g = phi.group;
    const int h = phi.h;

    EquivalenceReport rep;
    rep.orders = g.orders;
    rep.h = h;
    rep.z = z;
    rep.v = g.size;
    rep.normalization_shift = phiIn.values.empty() ? 0 : phiIn.values[0];

    bool homogeneous = g.arity() > 0;
    int q = homogeneous ? g.orders[0] : 0;
    for (int s : g.orders)
        if (s != q) homogeneous = false;

    const bool hPrime = CycInt::is_prime(h);
    rep.guarantee_triple = hPrime && (g.size % h == 0);
    rep.guarantee_plateaued = rep.guarantee_triple && allOnes && homogeneous && (q % h == 0);
    rep.guarantee_gpbf = allOnes && homogeneous && q == h;

    ExpansionContext ctx = expansion_context(g, z, h);
    ExponentArray ep = expand(phi, z);
    {
        AcTable act = ac_table(ep);
        rep.gpha = detail::gpha_from_ac(ctx, act, h);
        rep.gpbf = detail::gpbf_from_ac(act);
    }

    Cocycle psi = cocycle_product(mu_z(g, z, h), coboundary(phi));
    ExpMatrix mat = cocyclic_matrix(psi);
    rep.butson = is_butson(mat);
    rep.symmetric = is_symmetric(mat);

    rep.rds_ok = verify_rds(rds_from_expansion(phi, z));

    rep.coboundary_mu = mu_z_is_coboundary(g, z, h);

    if (homogeneous) rep.obstruction_holds = obstruction_condition_holds(phi);

    if (allOnes && homogeneous) {
        Spectrum sp = walsh_spectrum(ep, h * q);
        std::vector<long long> f = predicted_support(g, z, h);
        std::vector<char> inF(static_cast<std::size_t>(ep.group.size), 0);
        for (long long v : f) inF[static_cast<std::size_t>(v)] = 1;
        long long alpha = 1;
        for (std::size_t i = 0; i < g.arity(); ++i)
            alpha = detail::checked_mul(alpha, static_cast<long long>(h) * h * q);
        bool ok = true;
        for (long long w = 0; w < ep.group.size && ok; ++w) {
            const CycInt& p = sp.power[static_cast<std::size_t>(w)];
            ok = inF[static_cast<std::size_t>(w)] ? equals_integer(p, alpha) : p.is_zero();
        }
        rep.plateaued = ok;
    }

    if (!rep.symmetric)
        throw internal_error("cocyclic matrix over an abelian group must be symmetric");
    if (rep.guarantee_triple && (rep.gpha != rep.butson || rep.gpha != rep.rds_ok))
        throw internal_error("guaranteed equivalence gpha == butson == rds failed");
    if (rep.guarantee_plateaued && rep.plateaued && rep.gpha != *rep.plateaued)
        throw internal_error("guaranteed equivalence gpha == plateaued failed");
    if (rep.guarantee_gpbf && rep.obstruction_holds.value_or(false) && rep.gpha != rep.gpbf)
        throw internal_error("guaranteed equivalence gpha == gpbf failed");
    return rep;
}

} // namespace gpha
