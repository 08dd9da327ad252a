// Command-line front end: construct, expand, transform and verify
// generalized perfect arrays and their associated cocyclic Butson
// matrices and relative difference sets. All arithmetic is exact; the
// same inputs always produce byte-identical outputs.
//
// Exit codes: 0 = success / property holds, 1 = property fails,
// 2 = usage or data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpha/gpha.hpp"
#include "gpha/io.hpp"

using namespace gpha;

namespace {

std::vector<int> parse_type(const std::string& s, std::size_t arity) {
    std::vector<int> z;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("--type must be a string of 0s and 1s");
        z.push_back(c - '0');
    }
    if (z.empty()) z.assign(arity, 1);
    if (z.size() != arity)
        throw std::invalid_argument("--type length must match the number of coordinates");
    return z;
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + outPath);
        out << text;
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int homogeneous_q(const Group& g) {
    int q = g.orders.at(0);
    for (int s : g.orders)
        if (s != q) throw std::invalid_argument("this command needs a homogeneous domain");
    return q;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized perfect arrays, cocyclic Butson matrices and relative difference sets"};
    app.require_subcommand(1);

    std::string file, fileB, typeStr, outPath;
    std::string reportFormat = "text", factor = "product", mode = "quotient";
    std::string expandFormat = "json", matrixFormat = "text", spectrumFormat = "json";
    long long nArg = 0, budget = 1LL << 24;
    int kArg = 0, familyK = 3, familyMax = 8, workers = 1;
    std::string ordersStr;
    int hArg = 2;

    auto* verify = app.add_subcommand("verify", "run the full equivalence harness on an array");
    verify->add_option("file", file, "array json")->required();
    verify->add_option("--type", typeStr, "expansion type, e.g. 111 (default all ones)");
    verify->add_option("--report", reportFormat, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* expandCmd = app.add_subcommand("expand", "emit the expansion of an array");
    expandCmd->add_option("file", file, "array json")->required();
    expandCmd->add_option("--type", typeStr, "expansion type (default all ones)");
    expandCmd->add_option("--format", expandFormat, "json|text")->check(CLI::IsMember({"json", "text"}));
    expandCmd->add_option("-o,--out", outPath, "output path (default stdout)");

    auto* matrixCmd = app.add_subcommand("matrix", "emit a cocyclic matrix in logarithmic form");
    matrixCmd->add_option("file", file, "array json")->required();
    matrixCmd->add_option("--type", typeStr, "expansion type (default all ones)");
    matrixCmd->add_option("--factor", factor, "mu|coboundary|product")
        ->check(CLI::IsMember({"mu", "coboundary", "product"}));
    matrixCmd->add_option("--format", matrixFormat, "text|json")->check(CLI::IsMember({"json", "text"}));
    matrixCmd->add_option("-o,--out", outPath, "output path (default stdout)");

    auto* spectrumCmd = app.add_subcommand("spectrum", "autocorrelation table, spectrum and classification");
    spectrumCmd->add_option("file", file, "array json")->required();
    spectrumCmd->add_option("--type", typeStr, "classify the expansion of this type instead");
    spectrumCmd->add_option("--format", spectrumFormat, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* rdsCmd = app.add_subcommand("rds", "construct and verify a relative difference set");
    rdsCmd->add_option("file", file, "array json")->required();
    rdsCmd->add_option("--mode", mode, "quotient|splitting|extension")
        ->check(CLI::IsMember({"quotient", "splitting", "extension"}));
    rdsCmd->add_option("--type", typeStr, "expansion type for quotient/extension modes");

    auto* searchCmd = app.add_subcommand("search", "exhaustively list generalized perfect arrays");
    searchCmd->add_option("--orders", ordersStr, "comma-separated orders, e.g. 3,3")->required();
    searchCmd->add_option("--modulus", hArg, "value modulus h")->required();
    searchCmd->add_option("--type", typeStr, "expansion type (default all ones)");
    searchCmd->add_option("--budget", budget, "candidate budget (default 2^24)");
    searchCmd->add_option("--workers", workers, "worker threads (deterministic output)");

    auto* composeCmd = app.add_subcommand("compose", "kronecker composition of two certificates");
    composeCmd->add_option("first", file, "certificate json")->required();
    composeCmd->add_option("second", fileB, "certificate json")->required();
    composeCmd->add_option("-o,--out", outPath, "output path (default stdout)");

    auto* familyCmd = app.add_subcommand("family", "certified family member on Z_2^k");
    familyCmd->add_option("k", familyK, "number of binary coordinates, k >= 3")->required();
    familyCmd->add_option("--max-k", familyMax, "configured bound (default 8)");
    familyCmd->add_option("-o,--out", outPath, "output path (default stdout)");

    auto* feasCmd = app.add_subcommand("feasibility", "existence screens for BH(n,k)");
    feasCmd->add_option("n", nArg, "matrix order")->required();
    feasCmd->add_option("k", kArg, "root-of-unity order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            ExponentArray phi = load_array(file);
            std::vector<int> z = parse_type(typeStr, phi.group.arity());
            EquivalenceReport rep = equivalence_harness(phi, z);
            if (reportFormat == "json")
                std::fputs(dump(report_to_json(rep)).c_str(), stdout);
            else
                std::fputs(report_to_text(rep).c_str(), stdout);
            return rep.primary() ? 0 : 1;
        }
        if (*expandCmd) {
            ExponentArray phi = load_array(file);
            ExponentArray ep = expand(phi, parse_type(typeStr, phi.group.arity()));
            emit(expandFormat == "text" ? pretty_layers(ep) : dump(array_to_json(ep)), outPath);
            return 0;
        }
        if (*matrixCmd) {
            ExponentArray phi = load_array(file);
            std::vector<int> z = parse_type(typeStr, phi.group.arity());
            Cocycle c = factor == "mu" ? mu_z(phi.group, z, phi.h)
                        : factor == "coboundary"
                            ? coboundary(phi)
                            : cocycle_product(mu_z(phi.group, z, phi.h), coboundary(phi));
            ExpMatrix m = cocyclic_matrix(c);
            emit(matrixFormat == "json" ? dump(matrix_to_json(m)) : matrix_to_text(m), outPath);
            return 0;
        }
        if (*spectrumCmd) {
            ExponentArray phi = load_array(file);
            if (!typeStr.empty()) phi = expand(phi, parse_type(typeStr, phi.group.arity()));
            int q = homogeneous_q(phi.group);
            AcTable act = ac_table(phi);
            Spectrum sp = walsh_spectrum(phi, q);
            PlateauReport pl = classify_plateaued(phi, q);
            if (spectrumFormat == "json") {
                json j{{"ac", ac_to_json(act)}, {"spectrum", spectrum_to_json(sp)}};
                json p{{"plateaued", pl.plateaued}};
                p["alpha"] = pl.alpha ? json(*pl.alpha) : json();
                p["s_index"] = pl.s_index ? json(*pl.s_index) : json();
                p["support_size"] = pl.support.size();
                j["classification"] = std::move(p);
                std::fputs(dump(j).c_str(), stdout);
            } else {
                long long nz = 0;
                for (long long w = 0; w < act.shifts(); ++w) nz += !act.value_is_zero(w);
                std::printf("shifts: %lld, nonzero autocorrelations: %lld\n", act.shifts(), nz);
                std::printf("spectrum support (%zu of %lld):\n", sp.support().size(), phi.group.size);
                for (long long v : sp.support()) {
                    std::printf("  (");
                    Coords c = phi.group.unrank(v);
                    for (std::size_t i = 0; i < c.size(); ++i)
                        std::printf(i ? ",%d" : "%d", c[i]);
                    const CycInt& p = sp.power[static_cast<std::size_t>(v)];
                    if (auto iv = p.as_integer())
                        std::printf(")  |W|^2 = %lld\n", *iv);
                    else
                        std::printf(")  |W|^2 = %s\n", cyc_to_json(p).dump().c_str());
                }
                std::printf("plateaued: %s", pl.plateaued ? "yes" : "no");
                if (pl.alpha) std::printf(", alpha = %lld", *pl.alpha);
                if (pl.s_index) std::printf(" (%lld-generalized plateaued)", *pl.s_index);
                std::printf("\n");
            }
            return 0;
        }
        if (*rdsCmd) {
            ExponentArray phi = load_array(file);
            Rds r;
            if (mode == "splitting") {
                r = splitting_rds(phi);
            } else {
                std::vector<int> z = parse_type(typeStr, phi.group.arity());
                if (mode == "quotient") {
                    r = rds_from_expansion(phi, z);
                } else {
                    Cocycle psi = cocycle_product(mu_z(phi.group, z, phi.h), coboundary(phi));
                    r = ext_rds(psi);
                }
            }
            bool ok = verify_rds(r);
            std::fputs(dump(rds_to_json(r, ok)).c_str(), stdout);
            return ok ? 0 : 1;
        }
        if (*searchCmd) {
            std::vector<int> orders;
            std::stringstream ss(ordersStr);
            for (std::string part; std::getline(ss, part, ',');) orders.push_back(std::stoi(part));
            Group g(orders);
            std::vector<int> z = parse_type(typeStr, g.arity());
            SearchOptions opts;
            opts.budget = budget;
            opts.workers = workers;
            std::vector<SearchHit> hits = exhaustive_search(g, hArg, z, opts);
            for (const SearchHit& s : hits)
                std::fputs((search_hit_to_json(s).dump() + "\n").c_str(), stdout);
            std::fprintf(stderr, "%zu result(s)\n", hits.size());
            return 0;
        }
        if (*composeCmd) {
            CocycleCertificate a = certificate_from_file(file);
            CocycleCertificate b = certificate_from_file(fileB);
            if (!is_butson(cocyclic_matrix(a.full_cocycle())) ||
                !is_butson(cocyclic_matrix(b.full_cocycle()))) {
                std::fprintf(stderr, "input certificate fails the Butson check\n");
                return 1;
            }
            CocycleCertificate out = kronecker_compose(a, b);
            emit(dump(certificate_to_json(out)), outPath);
            return 0;
        }
        if (*familyCmd) {
            FamilyCertificate f = family_gpba(familyK, familyMax);
            json j = certificate_to_json(f.cocycle, false);
            j["report"] = report_to_json(f.report);
            j["array"] = array_to_json(f.chi);
            emit(dump(j), outPath);
            return 0;
        }
        if (*feasCmd) {
            bool order = butson_order_constraint(nArg, kArg);
            std::printf("butson order constraint: %s\n", order ? "pass" : "fail");
            bool rows = true;
            try {
                rows = row_sum_feasibility(nArg, kArg);
                if (!rows && kArg == 2)
                    std::printf("constant-row-sum screen: fail (k=2 requires square n)\n");
                else if (!rows && kArg == 4)
                    std::printf("constant-row-sum screen: fail (k=4 requires a sum of two squares)\n");
                else
                    std::printf("constant-row-sum screen: %s\n", rows ? "pass" : "fail");
            } catch (const budget_exceeded& e) {
                std::printf("constant-row-sum screen: refused (%s)\n", e.what());
                std::printf("%s\n", order ? "order constraint feasible; row-sum screen undecided"
                                          : "infeasible");
                return order ? 2 : 1;
            }
            bool feasible = order && rows;
            std::printf("%s\n", feasible ? "feasible" : (kArg == 2 && !rows
                                                             ? "infeasible (k=2 requires square n)"
                                                             : "infeasible"));
            return feasible ? 0 : 1;
        }
    } catch (const budget_exceeded& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 2;
    } catch (const internal_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
