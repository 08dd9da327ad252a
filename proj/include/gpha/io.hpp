#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gpha/autocorr.hpp"
#include "gpha/forge.hpp"
#include "gpha/harness.hpp"
#include "gpha/rds.hpp"
#include "gpha/spectra.hpp"

namespace gpha {

using json = nlohmann::json;

// ---- arrays -------------------------------------------------------------

inline json array_to_json(const ExponentArray& a) {
    return json{{"h", a.h}, {"s", a.group.orders}, {"values", a.values}};
}

inline ExponentArray array_from_json(const json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("s") || !j.contains("values"))
        throw std::invalid_argument("array json needs fields h, s, values");
    Group g(j.at("s").get<std::vector<int>>());
    return ExponentArray(g, j.at("h").get<int>(), j.at("values").get<std::vector<int>>());
}

inline ExponentArray load_array(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return array_from_json(j);
}

// ---- matrices -----------------------------------------------------------

inline json matrix_to_json(const ExpMatrix& m) {
    json rows = json::array();
    for (long long r = 0; r < m.n; ++r) {
        json row = json::array();
        for (long long c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n}, {"k", m.k}, {"rows", std::move(rows)}};
}

inline ExpMatrix matrix_from_json(const json& j) {
    ExpMatrix m(j.at("n").get<long long>(), j.at("k").get<int>());
    const json& rows = j.at("rows");
    if (static_cast<long long>(rows.size()) != m.n)
        throw std::invalid_argument("matrix row count mismatch");
    for (long long r = 0; r < m.n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (static_cast<long long>(row.size()) != m.n)
            throw std::invalid_argument("matrix is not square");
        for (long long c = 0; c < m.n; ++c) m.at(r, c) = row[static_cast<std::size_t>(c)].get<int>();
    }
    return m;
}

/// order, modulus and one rolling checksum per row; enough to pin a
/// matrix in a certificate without embedding all of it
inline json matrix_digest(const ExpMatrix& m) {
    json sums = json::array();
    for (long long r = 0; r < m.n; ++r) {
        std::uint64_t acc = 1469598103934665603ULL;
        for (long long c = 0; c < m.n; ++c) {
            acc ^= static_cast<std::uint64_t>(m.at(r, c));
            acc *= 1099511628211ULL;
        }
        sums.push_back(acc);
    }
    return json{{"order", m.n}, {"k", m.k}, {"row_checksums", std::move(sums)}};
}

// ---- cyclotomic values ----------------------------------------------------

inline json cyc_to_json(const CycInt& a) {
    if (auto n = a.as_integer()) return json(*n);
    return json{{"k", a.order}, {"coeffs", a.reduced()}};
}

// ---- autocorrelation and spectra ----------------------------------------

inline json ac_to_json(const AcTable& t) {
    json shifts = json::array(), values = json::array();
    for (long long w = 0; w < t.shifts(); ++w) {
        shifts.push_back(t.group.unrank(w));
        values.push_back(cyc_to_json(t.value(w)));
    }
    return json{{"shifts", std::move(shifts)}, {"values", std::move(values)}};
}

inline json spectrum_to_json(const Spectrum& sp) {
    json values = json::array();
    std::vector<json> alphas;
    for (const CycInt& p : sp.power) {
        json v = cyc_to_json(p);
        if (!p.is_zero()) {
            bool seen = false;
            for (const json& a : alphas) seen = seen || a == v;
            if (!seen) alphas.push_back(v);
        }
        values.push_back(std::move(v));
    }
    json support = json::array();
    for (long long v : sp.support()) support.push_back(sp.domain.unrank(v));
    return json{{"alpha_candidates", alphas}, {"support", std::move(support)}, {"values", std::move(values)}};
}

// ---- difference sets -----------------------------------------------------

inline json rds_element_to_json(const Ambient& amb, long long id) {
    switch (amb.kind) {
        case Ambient::Kind::Plain:
            return json(amb.plain.unrank(id));
        case Ambient::Kind::Quotient:
            return json(amb.quot.ambient.unrank(amb.quot.reps[static_cast<std::size_t>(id)]));
        default: {
            json j = json::array();
            j.push_back(amb.ext.twist(id));
            for (int c : amb.ext.base.unrank(amb.ext.shadow(id))) j.push_back(c);
            return j;
        }
    }
}

inline json rds_to_json(const Rds& r, bool verified) {
    json ambient;
    switch (r.ambient.kind) {
        case Ambient::Kind::Plain:
            ambient = json{{"kind", "group"}, {"orders", r.ambient.plain.orders}};
            break;
        case Ambient::Kind::Quotient: {
            json kernel = json::array();
            for (long long k : r.ambient.quot.kernel)
                kernel.push_back(r.ambient.quot.ambient.unrank(k));
            ambient = json{{"kind", "quotient"},
                           {"orders", r.ambient.quot.ambient.orders},
                           {"kernel", std::move(kernel)}};
            break;
        }
        default:
            ambient = json{{"kind", "extension"},
                           {"orders", r.ambient.ext.base.orders},
                           {"h", r.ambient.ext.h}};
    }
    json forbidden = json::array(), members = json::array();
    for (long long f : r.forbidden) forbidden.push_back(rds_element_to_json(r.ambient, f));
    for (long long m : r.members) members.push_back(rds_element_to_json(r.ambient, m));
    json params = json::array({r.params.v, r.params.n, r.params.k,
                               r.params.lambda_integral ? json(r.params.lambda) : json()});
    json out{{"ambient", std::move(ambient)},
             {"forbidden", std::move(forbidden)},
             {"members", std::move(members)},
             {"params", std::move(params)},
             {"verified", verified}};
    if (!r.warnings.empty()) out["warnings"] = r.warnings;
    return out;
}

// ---- equivalence reports ---------------------------------------------------

inline json report_to_json(const EquivalenceReport& r) {
    json j{{"orders", r.orders}, {"h", r.h},     {"z", r.z},
           {"v", r.v},           {"normalization_shift", r.normalization_shift},
           {"gpha", r.gpha}, {"butson", r.butson},
           {"symmetric", r.symmetric}, {"rds_ok", r.rds_ok}, {"gpbf", r.gpbf},
           {"coboundary_mu", r.coboundary_mu}};
    j["plateaued"] = r.plateaued ? json(*r.plateaued) : json();
    j["obstruction_holds"] = r.obstruction_holds ? json(*r.obstruction_holds) : json();
    j["guarantees"] = json{{"triple", r.guarantee_triple},
                           {"plateaued", r.guarantee_plateaued},
                           {"gpbf", r.guarantee_gpbf}};
    return j;
}

inline std::string report_to_text(const EquivalenceReport& r) {
    std::ostringstream os;
    os << "orders:";
    for (int s : r.orders) os << ' ' << s;
    os << "  h: " << r.h << "  type:";
    for (int zi : r.z) os << zi;
    os << "  v: " << r.v << '\n';
    auto line = [&](const char* name, bool val, bool guaranteed) {
        os << "  " << name << ": " << (val ? "true" : "false");
        if (guaranteed) os << "  [theorem-backed]";
        os << '\n';
    };
    line("gpha", r.gpha, r.guarantee_triple);
    line("butson", r.butson, r.guarantee_triple);
    os << "  symmetric: " << (r.symmetric ? "true" : "false") << '\n';
    line("rds", r.rds_ok, r.guarantee_triple);
    if (r.plateaued) line("plateaued", *r.plateaued, r.guarantee_plateaued);
    os << "  gpbf: " << (r.gpbf ? "true" : "false") << '\n';
    if (r.obstruction_holds)
        os << "  obstruction_holds: " << (*r.obstruction_holds ? "true" : "false") << '\n';
    os << "  mu_z splits (coboundary): " << (r.coboundary_mu ? "true" : "false") << '\n';
    return os.str();
}

// ---- certificates ----------------------------------------------------------

inline json certificate_to_json(const CocycleCertificate& c, bool withReport = true) {
    json j{{"orders", c.group().orders}, {"k", c.k}, {"phi", c.phi.values}};
    if (c.z) {
        j["z"] = *c.z;
    } else {
        ExpMatrix base = cocyclic_matrix(c.base_cocycle());
        j["base_rows"] = matrix_to_json(base)["rows"];
    }
    ExpMatrix m = cocyclic_matrix(c.full_cocycle());
    j["digest"] = matrix_digest(m);
    if (withReport && c.z) j["report"] = report_to_json(equivalence_harness(c.phi, *c.z));
    return j;
}

inline CocycleCertificate certificate_from_json(const json& j) {
    CocycleCertificate c;
    c.k = j.at("k").get<int>();
    Group g(j.at("orders").get<std::vector<int>>());
    c.phi = ExponentArray(g, c.k, j.at("phi").get<std::vector<int>>());
    if (j.contains("z")) {
        c.z = j.at("z").get<std::vector<int>>();
    } else if (j.contains("base_rows")) {
        const json& rows = j.at("base_rows");
        Cocycle base(g, c.k, CocycleKind::Imported);
        if (static_cast<long long>(rows.size()) != g.size)
            throw std::invalid_argument("certificate base table has the wrong size");
        for (long long a = 0; a < g.size; ++a)
            for (long long b = 0; b < g.size; ++b)
                base.at(a, b) = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].get<int>();
        if (!is_cocycle(base))
            throw std::invalid_argument("certificate base table is not a cocycle");
        c.base = std::move(base);
    } else {
        throw std::invalid_argument("certificate needs either z or base_rows");
    }
    return c;
}

inline CocycleCertificate certificate_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return certificate_from_json(j);
}

inline json search_hit_to_json(const SearchHit& s) {
    return json{{"index", s.index},
                {"array", array_to_json(s.phi)},
                {"report", report_to_json(s.report)},
                {"digest", matrix_digest(cocyclic_matrix(
                               cocycle_product(mu_z(s.phi.group, s.report.z, s.phi.h),
                                               coboundary(s.phi))))}};
}

} // namespace gpha
