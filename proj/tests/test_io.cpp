#include <doctest.h>

#include <random>

#include "gpha/io.hpp"
#include "test_util.hpp"

using namespace gpha;

TEST_CASE("array json round trip and file loading") {
    ExponentArray a(Group({3, 4}), 6, std::vector<int>(12, 0));
    a.values[5] = 4;
    ExponentArray b = array_from_json(array_to_json(a));
    CHECK(b.values == a.values);
    CHECK(b.group.orders == a.group.orders);
    CHECK(b.h == a.h);

    ExponentArray fromFile = load_array(testutil::source_dir() + "/data/gp3a_3_2.json");
    CHECK(fromFile.group.orders == std::vector<int>{3, 3});
    CHECK(fromFile.h == 3);
    CHECK(fromFile.values == std::vector<int>{0, 0, 0, 0, 1, 0, 2, 2, 1});

    CHECK_THROWS_AS(array_from_json(json{{"h", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(array_from_json(json{{"h", 2}, {"s", {2}}, {"values", {0, 5}}}),
                    std::invalid_argument);
}

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 20; ++t) {
        long long n = 1 + static_cast<long long>(rng() % 9);
        int k = 2 + static_cast<int>(rng() % 7);
        ExpMatrix m(n, k);
        for (auto& e : m.entries) e = static_cast<int>(rng() % k);
        CHECK(matrix_from_text(matrix_to_text(m), k) == m);
    }
    CHECK_THROWS_AS(matrix_from_text("1 2\n3\n", 4), std::invalid_argument);
}

TEST_CASE("matrix json round trip") {
    ExpMatrix m(3, 5);
    m.at(0, 1) = 4;
    m.at(2, 2) = 3;
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("expansion written out and re-ingested has the same autocorrelation") {
    ExponentArray phi = load_array(testutil::source_dir() + "/data/gpba_2_3.json");
    ExponentArray ep = expand(phi, {1, 1, 1});
    ExponentArray back = array_from_json(array_to_json(ep));
    AcTable t1 = ac_table(ep), t2 = ac_table(back);
    CHECK(t1.counts == t2.counts);
}

TEST_CASE("cyclotomic json uses plain integers where possible") {
    CHECK(cyc_to_json(CycInt::from_integer(4, 7)) == json(7));
    CycInt irr = CycInt::from_integer(5, 4) + cyc_root(5, 1);
    json j = cyc_to_json(norm_squared(irr));
    CHECK(j.is_object());
    CHECK(j.contains("coeffs"));
}

TEST_CASE("report json carries every verdict") {
    ExponentArray phi = load_array(testutil::source_dir() + "/data/gp3a_3_2.json");
    json j = report_to_json(equivalence_harness(phi, {1, 1}));
    CHECK(j.at("gpha") == true);
    CHECK(j.at("butson") == true);
    CHECK(j.at("rds_ok") == true);
    CHECK(j.at("plateaued") == true);
    CHECK(j.at("gpbf") == true);
    CHECK(j.at("obstruction_holds") == true);
    CHECK(j.at("guarantees").at("triple") == true);
}

TEST_CASE("certificate round trip") {
    CocycleCertificate c;
    c.k = 2;
    c.phi = gpba_2_cubed_seed();
    c.z = std::vector<int>{1, 1, 1};
    json j = certificate_to_json(c);
    CHECK(j.at("digest").at("order") == 8);
    CHECK(j.at("report").at("gpha") == true);
    CocycleCertificate back = certificate_from_json(j);
    CHECK(back.k == 2);
    CHECK(back.phi.values == c.phi.values);
    REQUIRE(back.z.has_value());
    CHECK(*back.z == std::vector<int>{1, 1, 1});
    CHECK(cocyclic_matrix(back.full_cocycle()) == cocyclic_matrix(c.full_cocycle()));
}

TEST_CASE("certificates with explicit base tables survive the round trip") {
    CocycleCertificate c;
    c.k = 2;
    c.phi = ExponentArray(Group({2}), 2, {0, 0});
    c.base = mu_z(Group({2}), {1}, 2);
    json j = certificate_to_json(c);
    CHECK(j.contains("base_rows"));
    CocycleCertificate back = certificate_from_json(j);
    CHECK(cocyclic_matrix(back.full_cocycle()) == cocyclic_matrix(c.full_cocycle()));
}

TEST_CASE("spectrum json lists the single nonzero level") {
    ExponentArray phi = load_array(testutil::source_dir() + "/data/gp3a_3_2.json");
    Spectrum sp = walsh_spectrum(expand(phi, {1, 1}), 9);
    json j = spectrum_to_json(sp);
    CHECK(j.at("alpha_candidates") == json::array({729}));
    CHECK(j.at("support").size() == 9);
    CHECK(j.at("values").size() == 81);
}

TEST_CASE("rds json") {
    Rds r = splitting_rds(ExponentArray(Group({2, 2}), 2, {0, 0, 0, 1}));
    json j = rds_to_json(r, verify_rds(r));
    CHECK(j.at("verified") == true);
    CHECK(j.at("params") == json::array({4, 2, 4, 2}));
    CHECK(j.at("members").size() == 4);
    CHECK(j.at("ambient").at("kind") == "group");
}

TEST_CASE("search hits serialize one object per result") {
    auto hits = exhaustive_search(Group({2, 2}), 2, {1, 1});
    for (const SearchHit& s : hits) {
        json j = search_hit_to_json(s);
        CHECK(j.contains("array"));
        CHECK(j.at("report").at("gpha") == true);
        CHECK(j.at("digest").at("k") == 2);
    }
}
