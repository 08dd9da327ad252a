#include <doctest.h>

#include "gpha/forge.hpp"

using namespace gpha;

namespace {

CocycleCertificate seed_certificate() {
    CocycleCertificate c;
    c.k = 2;
    c.phi = gpba_2_cubed_seed();
    c.z = std::vector<int>{1, 1, 1};
    return c;
}

CocycleCertificate gp3a_certificate() {
    CocycleCertificate c;
    c.k = 3;
    c.phi = ExponentArray(Group({3, 3}), 3, {0, 0, 0, 0, 1, 0, 2, 2, 1});
    c.z = std::vector<int>{1, 1};
    return c;
}

} // namespace

TEST_CASE("kronecker composition with the order-two unit") {
    CocycleCertificate out = kronecker_compose(seed_certificate(), binary_unit_certificate());
    CHECK(out.group().orders == std::vector<int>{2, 2, 2, 2});
    CHECK(out.k == 2);
    ExpMatrix m = cocyclic_matrix(out.full_cocycle());
    CHECK(m.n == 16);
    CHECK(is_butson(m));
    CHECK(is_symmetric(m));
    // the composed map is the seed, constant in the new coordinate
    ExponentArray seed = gpba_2_cubed_seed();
    for (long long x = 0; x < 8; ++x)
        for (long long y = 0; y < 2; ++y) CHECK(out.phi.at(x * 2 + y) == seed.at(x));
}

TEST_CASE("kronecker composition with a trivial factor changes nothing") {
    CocycleCertificate unit;
    unit.k = 2;
    unit.phi = ExponentArray(Group(std::vector<int>{}), 2, {0});
    unit.z = std::vector<int>{};
    CocycleCertificate out = kronecker_compose(seed_certificate(), unit);
    CHECK(out.group().orders == std::vector<int>{2, 2, 2});
    CHECK(out.phi.values == gpba_2_cubed_seed().values);
    CHECK(cocyclic_matrix(out.full_cocycle()) ==
          cocyclic_matrix(seed_certificate().full_cocycle()));
}

TEST_CASE("squaring the ternary example gives a BH(81,3) and a GP3A(3^4)") {
    CocycleCertificate out = kronecker_compose(gp3a_certificate(), gp3a_certificate());
    CHECK(out.group().orders == std::vector<int>{3, 3, 3, 3});
    ExpMatrix m = cocyclic_matrix(out.full_cocycle());
    CHECK(m.n == 81);
    CHECK(m.k == 3);
    CHECK(is_butson(m));
    CHECK(is_symmetric(m));
    REQUIRE(out.z.has_value());
    EquivalenceReport rep = equivalence_harness(out.phi, *out.z);
    CHECK(rep.gpha);
    CHECK(rep.plateaued == true);
}

TEST_CASE("composition refuses non-orthogonal factors") {
    CocycleCertificate bad;
    bad.k = 2;
    bad.phi = ExponentArray(Group({2, 2}), 2, {0, 1, 0, 0});
    bad.z = std::vector<int>{1, 1};
    CHECK_FALSE(is_butson(cocyclic_matrix(bad.full_cocycle())));
    CHECK_THROWS_AS(kronecker_compose(seed_certificate(), bad), std::invalid_argument);
}

TEST_CASE("the composed matrix is literally the kronecker product") {
    ExpMatrix a(2, 2), b(2, 2);
    a.at(1, 1) = 1;
    b.at(0, 1) = 1;
    ExpMatrix m = kronecker_product(a, b);
    CHECK(m.n == 4);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(3, 2) == 1);
    CHECK(m.at(3, 3) == 1);
    CHECK(m.at(2, 3) == 0); // a(1,1) + b(0,1) cancels mod 2
    // mixed moduli embed into the lcm
    ExpMatrix c(2, 3);
    c.at(1, 1) = 2;
    ExpMatrix mixed = kronecker_product(a, c);
    CHECK(mixed.k == 6);
    CHECK(mixed.at(3, 3) == (1 * 3 + 2 * 2) % 6);
}

TEST_CASE("mixed-modulus composition lands in the lcm ring") {
    // 2x2 Hadamard (k=2) with the 3x3 Fourier matrix written as a pure
    // coboundary (k=3): the composition is a BH(6,6)
    CocycleCertificate a;
    a.k = 2;
    a.phi = ExponentArray(Group({2}), 2, {0, 0});
    a.z = std::vector<int>{1};

    CocycleCertificate b;
    b.k = 3;
    b.phi = ExponentArray(Group({3}), 3, {0, 2, 2}); // del phi = the Fourier table
    b.z = std::vector<int>{0};
    {
        ExpMatrix f = cocyclic_matrix(b.full_cocycle());
        CHECK(f.entries == std::vector<int>{0, 0, 0, 0, 1, 2, 0, 2, 1});
        CHECK(is_butson(f));
    }

    CocycleCertificate out = kronecker_compose(a, b);
    CHECK(out.k == 6);
    CHECK(out.group().orders == std::vector<int>{2, 3});
    CHECK_FALSE(out.z.has_value()); // mixed moduli force an explicit base table
    REQUIRE(out.base.has_value());
    ExpMatrix m = cocyclic_matrix(out.full_cocycle());
    CHECK(m.n == 6);
    CHECK(m.k == 6);
    CHECK(is_butson(m));
}

TEST_CASE("family members verify through k = 5") {
    FamilyCertificate f3 = family_gpba(3);
    CHECK(f3.chi.values == gpba_2_cubed_seed().values);
    CHECK(f3.report.gpha);

    FamilyCertificate f4 = family_gpba(4);
    CHECK(f4.chi.group.orders == std::vector<int>(4, 2));
    for (long long x = 0; x < 8; ++x)
        for (long long y = 0; y < 2; ++y)
            CHECK(f4.chi.at(x * 2 + y) == f3.chi.at(x)); // constant in the new slot
    CHECK(f4.matrix.n == 16);
    CHECK(is_butson(f4.matrix));

    FamilyCertificate f5 = family_gpba(5);
    CHECK(f5.report.gpha);
    CHECK(f5.report.gpbf);
    CHECK(f5.report.plateaued == true);

    CHECK_THROWS_AS(family_gpba(2), std::invalid_argument);
    CHECK_THROWS_AS(family_gpba(9, 8), budget_exceeded);
}

TEST_CASE("exhaustive search on the smallest space") {
    std::vector<SearchHit> hits = exhaustive_search(Group({2, 2}), 2, {1, 1});
    // raw normalized count, derived once by both filters independently
    CHECK(hits.size() == 4);
    // lexicographic order and full harness on every hit
    for (std::size_t i = 1; i < hits.size(); ++i) CHECK(hits[i - 1].index < hits[i].index);
    for (const SearchHit& s : hits) {
        CHECK(s.report.gpha);
        CHECK(s.report.butson);
        CHECK(s.report.rds_ok);
    }
    // the near-constant delta map is not among them
    for (const SearchHit& s : hits)
        CHECK(s.phi.values != std::vector<int>{0, 1, 0, 0});
    // both filters agree
    SearchOptions ac;
    ac.filter = SearchFilter::AcDefinition;
    std::vector<SearchHit> viaAc = exhaustive_search(Group({2, 2}), 2, {1, 1}, ac);
    REQUIRE(viaAc.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) CHECK(viaAc[i].phi.values == hits[i].phi.values);
}

TEST_CASE("search finds the seed on the binary cube") {
    std::vector<SearchHit> hits = exhaustive_search(Group({2, 2, 2}), 2, {1, 1, 1});
    CHECK(hits.size() == 32);
    bool containsSeed = false;
    for (const SearchHit& s : hits) containsSeed |= s.phi.values == gpba_2_cubed_seed().values;
    CHECK(containsSeed);

    // worker count must not change the result
    SearchOptions par;
    par.workers = 2;
    std::vector<SearchHit> hits2 = exhaustive_search(Group({2, 2, 2}), 2, {1, 1, 1}, par);
    REQUIRE(hits2.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        CHECK(hits2[i].index == hits[i].index);
        CHECK(hits2[i].phi.values == hits[i].phi.values);
    }

    // AC-definition filter returns the identical list
    SearchOptions ac;
    ac.filter = SearchFilter::AcDefinition;
    std::vector<SearchHit> viaAc = exhaustive_search(Group({2, 2, 2}), 2, {1, 1, 1}, ac);
    REQUIRE(viaAc.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) CHECK(viaAc[i].index == hits[i].index);
}

TEST_CASE("both filters agree over the full ternary space") {
    std::vector<SearchHit> viaButson = exhaustive_search(Group({3, 3}), 3, {1, 1});
    SearchOptions ac;
    ac.filter = SearchFilter::AcDefinition;
    std::vector<SearchHit> viaAc = exhaustive_search(Group({3, 3}), 3, {1, 1}, ac);
    CHECK(viaButson.size() == 54);
    REQUIRE(viaButson.size() == viaAc.size());
    for (std::size_t i = 0; i < viaButson.size(); ++i)
        CHECK(viaButson[i].index == viaAc[i].index);
    bool containsExample = false;
    ExponentArray known(Group({3, 3}), 3, {0, 0, 0, 0, 1, 0, 2, 2, 1});
    for (const SearchHit& s : viaButson) containsExample |= s.phi.values == known.values;
    CHECK(containsExample);
    // uneven worker partition must not change the merged output
    SearchOptions par;
    par.workers = 3;
    std::vector<SearchHit> par3 = exhaustive_search(Group({3, 3}), 3, {1, 1}, par);
    REQUIRE(par3.size() == viaButson.size());
    for (std::size_t i = 0; i < par3.size(); ++i) CHECK(par3[i].index == viaButson[i].index);
    // prime q: every hit's expansion is 2m-generalized plateaued
    for (const SearchHit& s : viaButson) {
        PlateauReport rep = classify_plateaued(expand(s.phi, {1, 1}), 9);
        CHECK(rep.plateaued);
        CHECK(rep.s_index == 4);
    }
}

TEST_CASE("search budget refusal") {
    SearchOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(exhaustive_search(Group({2, 2, 2}), 2, {1, 1, 1}, tight), budget_exceeded);
    CHECK_THROWS_AS(exhaustive_search(Group({2, 2}), 2, {0, 0}), std::invalid_argument);
}
