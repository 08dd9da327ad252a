#pragma once

#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "gpha/harness.hpp"

namespace gpha {

/// An orthogonal cocycle presented as (base part, coboundary part): the
/// cocycle is base * del(phi). The base is mu_z whenever a type vector is
/// known, an explicit table otherwise (mixed-modulus compositions).
struct CocycleCertificate {
    int k = 2;                       // coefficient modulus
    ExponentArray phi;               // coboundary data, modulus k
    std::optional<std::vector<int>> z;
    std::optional<Cocycle> base;     // set when z is not

    const Group& group() const { return phi.group; }

    Cocycle base_cocycle() const {
        if (z) return mu_z(phi.group, *z, k);
        if (base) return *base;
        throw std::invalid_argument("certificate lacks both a type vector and a base table");
    }

    Cocycle full_cocycle() const {
        return cocycle_product(base_cocycle(), coboundary(phi));
    }
};

inline ExpMatrix kronecker_product(const ExpMatrix& a, const ExpMatrix& b) {
    int k = static_cast<int>(std::lcm(a.k, b.k));
    ExpMatrix m(detail::checked_mul(a.n, b.n), k);
    const int fa = k / a.k, fb = k / b.k;
    for (long long ia = 0; ia < a.n; ++ia)
        for (long long ja = 0; ja < a.n; ++ja) {
            int ea = a.at(ia, ja) * fa;
            for (long long ib = 0; ib < b.n; ++ib)
                for (long long jb = 0; jb < b.n; ++jb)
                    m.at(ia * b.n + ib, ja * b.n + jb) =
                        (ea + b.at(ib, jb) * fb) % k;
        }
    return m;
}

/// Composition of two verified orthogonal cocycles over the product
/// group; the matrix of the result is the Kronecker product of the
/// factor matrices, re-verified along with orthogonality.
inline CocycleCertificate kronecker_compose(const CocycleCertificate& c1, const CocycleCertificate& c2,
                                            long long maxOrder = 4096) {
    if (detail::checked_mul(c1.group().size, c2.group().size) > maxOrder)
        throw budget_exceeded("composed order " + std::to_string(c1.group().size * c2.group().size) +
                              " exceeds the verification bound " + std::to_string(maxOrder));
    ExpMatrix m1 = cocyclic_matrix(c1.full_cocycle());
    ExpMatrix m2 = cocyclic_matrix(c2.full_cocycle());
    if (!is_butson(m1) || !is_butson(m2))
        throw std::invalid_argument("kronecker composition requires orthogonal factors");

    const int k = static_cast<int>(std::lcm(c1.k, c2.k));
    const int f1 = k / c1.k, f2 = k / c2.k;
    const Group &g1 = c1.group(), &g2 = c2.group();

    std::vector<int> orders(g1.orders);
    orders.insert(orders.end(), g2.orders.begin(), g2.orders.end());
    Group g(orders);

    std::vector<int> phiVals(static_cast<std::size_t>(g.size));
    for (long long r1 = 0; r1 < g1.size; ++r1)
        for (long long r2 = 0; r2 < g2.size; ++r2)
            phiVals[static_cast<std::size_t>(r1 * g2.size + r2)] =
                (c1.phi.at(r1) * f1 + c2.phi.at(r2) * f2) % k;

    CocycleCertificate out;
    out.k = k;
    out.phi = ExponentArray(g, k, std::move(phiVals));
    if (c1.z && c2.z && c1.k == k && c2.k == k) {
        std::vector<int> z(*c1.z);
        z.insert(z.end(), c2.z->begin(), c2.z->end());
        out.z = std::move(z);
    } else {
        Cocycle b1 = c1.base_cocycle();
        Cocycle b2 = c2.base_cocycle();
        Cocycle base(g, k, CocycleKind::Product);
        for (long long a1 = 0; a1 < g1.size; ++a1)
            for (long long a2 = 0; a2 < g2.size; ++a2)
                for (long long b1r = 0; b1r < g1.size; ++b1r)
                    for (long long b2r = 0; b2r < g2.size; ++b2r)
                        base.at(a1 * g2.size + a2, b1r * g2.size + b2r) =
                            (b1.at(a1, b1r) * f1 + b2.at(a2, b2r) * f2) % k;
        out.base = std::move(base);
    }

    ExpMatrix composed = cocyclic_matrix(out.full_cocycle());
    if (!(composed == kronecker_product(m1, m2)))
        throw internal_error("composed matrix is not the kronecker product of the factors");
    if (!is_butson(composed))
        throw internal_error("kronecker composition failed to preserve orthogonality");
    if (is_symmetric(m1) && is_symmetric(m2) && !is_symmetric(composed))
        throw internal_error("kronecker composition failed to preserve symmetry");
    return out;
}

/// The binary seed: a generalized perfect binary array on Z_2^3 whose
/// cocycle mu_1 del(phi) is symmetric and orthogonal.
inline ExponentArray gpba_2_cubed_seed() {
    return ExponentArray(Group({2, 2, 2}), 2, {0, 1, 1, 1, 0, 1, 0, 0});
}

/// The order-two unit factor: mu_1 over Z_2 with trivial coboundary; its
/// matrix is the 2 x 2 Hadamard matrix.
inline CocycleCertificate binary_unit_certificate() {
    CocycleCertificate c;
    c.k = 2;
    c.phi = ExponentArray(Group({2}), 2, {0, 0});
    c.z = std::vector<int>{1};
    return c;
}

struct FamilyCertificate {
    ExponentArray chi;          // the array on Z_2^k
    CocycleCertificate cocycle; // mu_1 del(chi)
    ExpMatrix matrix;           // symmetric element of BH(2^k, 2)
    EquivalenceReport report;
};

/// For every k >= 3, a map Z_2^k -> Z_2 that is a generalized perfect
/// binary array of type all-ones: the seed composed with powers of the
/// order-two unit. The whole equivalence harness runs on the result.
inline FamilyCertificate family_gpba(int k, int maxK = 8) {
    if (k < 3) throw std::invalid_argument("the family starts at k = 3");
    if (k > maxK)
        throw budget_exceeded("family order 2^" + std::to_string(k) +
                              " exceeds the configured bound 2^" + std::to_string(maxK));
    CocycleCertificate acc;
    acc.k = 2;
    acc.phi = gpba_2_cubed_seed();
    acc.z = std::vector<int>{1, 1, 1};
    for (int i = 3; i < k; ++i) acc = kronecker_compose(acc, binary_unit_certificate());

    FamilyCertificate out;
    out.chi = acc.phi;
    out.cocycle = acc;
    out.matrix = cocyclic_matrix(acc.full_cocycle());
    out.report = equivalence_harness(acc.phi, *acc.z);
    if (!out.report.gpha || !out.report.butson || !out.report.symmetric)
        throw internal_error("family member failed verification");
    return out;
}

enum class SearchFilter { Auto, ButsonMatrix, AcDefinition };

struct SearchOptions {
    long long budget = 1LL << 24;
    int workers = 1;
    SearchFilter filter = SearchFilter::Auto;
};

struct SearchHit {
    long long index = 0; // lexicographic candidate index
    ExponentArray phi;
    EquivalenceReport report;
};

/// All normalized generalized perfect arrays of the given shape and type,
/// in lexicographic order of their value vectors. When h is prime the
/// Butson check is the fast filter; hits then get the full harness.
inline std::vector<SearchHit> exhaustive_search(const Group& g, int h, const std::vector<int>& z,
                                                const SearchOptions& opts = {}) {
    if (z.size() != g.arity())
        throw std::invalid_argument("type vector length must match group arity");
    bool allZero = true;
    for (int zi : z)
        if (zi != 0) allZero = false;
    if (allZero) throw std::invalid_argument("search requires type z != 0");
    long long total = 1;
    for (long long i = 1; i < g.size; ++i) {
        total = detail::checked_mul(total, h);
        if (total > opts.budget)
            throw budget_exceeded("search space " + std::to_string(g.size - 1) + " digits base " +
                                  std::to_string(h) + " exceeds the budget of " +
                                  std::to_string(opts.budget) + " candidates");
    }

    SearchFilter filter = opts.filter;
    if (filter == SearchFilter::Auto)
        filter = CycInt::is_prime(h) ? SearchFilter::ButsonMatrix : SearchFilter::AcDefinition;

    auto decode = [&](long long index) {
        std::vector<int> vals(static_cast<std::size_t>(g.size), 0);
        for (long long r = g.size - 1; r >= 1; --r) {
            vals[static_cast<std::size_t>(r)] = static_cast<int>(index % h);
            index /= h;
        }
        return vals;
    };

    const Cocycle mu = mu_z(g, z, h);
    const int workers = std::max(1, opts.workers);
    std::vector<std::vector<SearchHit>> parts(static_cast<std::size_t>(workers));
    auto run = [&](int wi) {
        long long lo = total * wi / workers;
        long long hi = total * (wi + 1) / workers;
        for (long long idx = lo; idx < hi; ++idx) {
            ExponentArray phi(g, h, decode(idx));
            bool hit;
            if (filter == SearchFilter::ButsonMatrix)
                hit = is_butson(cocyclic_matrix(cocycle_product(mu, coboundary(phi))));
            else
                hit = is_gpha(phi, z);
            if (!hit) continue;
            SearchHit s;
            s.index = idx;
            s.phi = phi;
            s.report = equivalence_harness(phi, z);
            parts[static_cast<std::size_t>(wi)].push_back(std::move(s));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(run, wi);
        for (auto& t : pool) t.join();
    }

    std::vector<SearchHit> out;
    for (auto& p : parts)
        for (auto& s : p) out.push_back(std::move(s));
    return out;
}

} // namespace gpha
