// Command-line front end: prints the family tables and runs the verification
// suites with machine-readable (--json) or human-readable output.
//
// Exit codes: 0 all checks pass, 1 a mathematical assertion failed,
// 2 usage error.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetarep/cusp.hpp"
#include "thetarep/curves.hpp"
#include "thetarep/d2n.hpp"
#include "thetarep/mod2.hpp"
#include "thetarep/rootsys.hpp"
#include "thetarep/version.hpp"

using json = nlohmann::ordered_json;
using namespace thetarep;
using exactla::Int;
using exactla::Rat;

namespace {

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string rat_str(const Rat& r) { return r.get_str(); }

json make_report(const std::string& command, json params, json records, long pass, long fail,
                 std::uint64_t seed) {
    json rep;
    rep["command"] = command;
    rep["params"] = std::move(params);
    rep["records"] = std::move(records);
    rep["summary"] = {{"pass", pass}, {"fail", fail}};
    rep["meta"] = {{"seed", seed}, {"version", kVersion}};
    return rep;
}

// Reports must be byte-identical across runs, so timing goes only to the
// human-readable stream.
int emit(const json& rep, bool as_json, const Clock& clock,
         const std::function<void(const json&)>& human) {
    long fail = rep["summary"]["fail"].get<long>();
    if (as_json) {
        std::cout << rep.dump(2) << '\n';
    } else {
        human(rep);
        std::printf("summary: pass=%ld fail=%ld (%.1f ms)\n",
                    rep["summary"]["pass"].get<long>(), fail, clock.ms());
    }
    return fail == 0 ? 0 : 1;
}

const std::vector<std::string> kTableTypes = {"A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                              "A9", "D4", "D5", "D6", "D7", "E6", "E7", "E8"};

int cmd_tables(bool as_json) {
    Clock clock;
    json records = json::array();
    long pass = 0, fail = 0;
    for (const std::string& name : kTableTypes) {
        rootsys::Label label = rootsys::parse_label(name);
        rootsys::RootSystem rs = rootsys::build(label);
        mod2::ComponentGroup cg = mod2::component_group(rs);
        mod2::DerivedConstants dc = mod2::derived_constants(rs);
        curves::CurveFamily fam = curves::make_family(label);

        std::size_t degree_sum = 0;
        for (unsigned d : fam.degrees) degree_sum += d;
        bool ok = degree_sum == rootsys::dim_v(rs) && fam.marked_points == cg.m;
        (ok ? pass : fail) += 1;

        json row;
        row["type"] = name;
        row["degrees"] = fam.degrees;
        row["dim_v"] = rootsys::dim_v(rs);
        row["roots"] = rs.roots.size();
        row["genus"] = fam.genus;
        row["pi0"] = cg.structure;
        row["m"] = cg.m;
        row["two_pow_m"] = dc.tamagawa_number.get_str();
        row["selmer_bound"] = dc.average_selmer_bound.get_str();
        row["consistent"] = ok;
        records.push_back(std::move(row));
    }
    json rep = make_report("tables", json::object(), std::move(records), pass, fail, 0);
    return emit(rep, as_json, clock, [](const json& r) {
        std::printf("%-5s %-18s %5s %6s %5s %-8s %2s %5s %6s\n", "type", "degrees", "dimV",
                    "roots", "genus", "pi0", "m", "2^m", "bound");
        for (const json& row : r["records"]) {
            std::string degs;
            for (const json& d : row["degrees"]) degs += std::to_string(d.get<unsigned>()) + " ";
            std::printf("%-5s %-18s %5ld %6ld %5ld %-8s %2d %5s %6s\n",
                        row["type"].get<std::string>().c_str(), degs.c_str(),
                        row["dim_v"].get<long>(), row["roots"].get<long>(),
                        row["genus"].get<long>(), row["pi0"].get<std::string>().c_str(),
                        row["m"].get<int>(), row["two_pow_m"].get<std::string>().c_str(),
                        row["selmer_bound"].get<std::string>().c_str());
        }
    });
}

int cmd_monodromy(const std::string& type, bool as_json) {
    Clock clock;
    rootsys::RootSystem rs = rootsys::build(rootsys::parse_label(type));
    mod2::Mod2Module n = mod2::n_lattice(rs);

    json records = json::array();
    long pass = 0, fail = 0;
    auto push = [&](const char* property, bool ok) {
        records.push_back({{"property", property}, {"pass", ok}});
        (ok ? pass : fail) += 1;
    };
    push("roots_nonzero_in_quotient", mod2::roots_nonzero_in_n(rs));
    push("no_invariant_vectors", mod2::check_no_invariants(n));
    push("absolutely_irreducible", mod2::check_absolutely_irreducible(n));
    bool fixed_free = true;
    try {
        mod2::anisotropic_element(n);
    } catch (const std::logic_error&) {
        fixed_free = false;
    }
    push("fixed_point_free_element", fixed_free);

    json rep = make_report("monodromy", {{"type", type}, {"dim", n.dim}}, std::move(records),
                           pass, fail, 0);
    return emit(rep, as_json, clock, [](const json& r) {
        for (const json& row : r["records"])
            std::printf("%-28s %s\n", row["property"].get<std::string>().c_str(),
                        row["pass"].get<bool>() ? "pass" : "FAIL");
    });
}

int cmd_cusp(std::size_t n, std::size_t cap, double budget_seconds, bool as_json) {
    Clock clock;
    cusp::WeightPoset poset(n);
    cusp::CuspReport report = cusp::verify_all(poset, cap);
    if (clock.ms() > budget_seconds * 1000.0) {
        std::fprintf(stderr, "error: verification exceeded the %.0f second budget\n",
                     budget_seconds);
        return 1;
    }

    json records = json::array();
    for (const cusp::CuspRecord& rec : report.records) {
        json row;
        row["m"] = rec.m.hex();
        row["card"] = rec.m.card;
        row["verdict"] =
            rec.verdict.pass ? "good" : "cond" + std::to_string(rec.verdict.violated);
        row["lambda"] = rat_str(rec.lambda_star);
        row["sum_f"] = rec.cert ? json(rat_str(rec.cert->sum_f)) : json();
        row["margin"] = rec.cert ? json(rat_str(rec.cert->margin)) : json();
        if (n >= 3) {
            row["ind_lambda"] = rec.induction_lambda ? json(rat_str(*rec.induction_lambda)) : json();
            row["ind_sum_f"] =
                rec.induction_cert ? json(rat_str(rec.induction_cert->sum_f)) : json();
        }
        records.push_back(std::move(row));
    }

    long fail = static_cast<long>(report.failures);
    long pass = static_cast<long>(report.total) - fail;
    json params = {{"n", n}, {"cap", cap}};
    json rep = make_report("cusp", std::move(params), std::move(records), pass, fail, 0);
    rep["summary"]["total"] = report.total;
    rep["summary"]["good"] = report.good;
    rep["summary"]["certified"] = report.certified;
    rep["summary"]["induction_certified"] = report.induction_certified;
    rep["summary"]["orbits"] = report.omega_orbits;
    rep["summary"]["orbits_good"] = report.omega_orbits_good;
    rep["summary"]["min_margin"] =
        report.min_margin ? json(rat_str(*report.min_margin)) : json();
    rep["summary"]["max_sum_f"] = rat_str(report.max_sum_f);
    return emit(rep, as_json, clock, [&](const json& r) {
        const json& s = r["summary"];
        std::printf("subsets=%ld filtered=%ld certified=%ld orbits=%ld/%ld\n",
                    s["total"].get<long>(), s["good"].get<long>(), s["certified"].get<long>(),
                    s["orbits_good"].get<long>(), s["orbits"].get<long>());
        if (s["induction_certified"].get<long>() > 0)
            std::printf("induction_certified=%ld\n", s["induction_certified"].get<long>());
        if (!s["min_margin"].is_null())
            std::printf("min_margin=%s max_sum_f=%s\n",
                        s["min_margin"].get<std::string>().c_str(),
                        s["max_sum_f"].get<std::string>().c_str());
    });
}

int cmd_disc(std::size_t n, long trials, std::uint64_t seed, bool as_json) {
    Clock clock;
    std::mt19937_64 rng(seed);
    json records = json::array();
    long pass = 0, fail = 0;
    for (long t = 0; t < trials; ++t) {
        exactla::RatMatrix a(2 * n, 2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j)
                a.at(i, j) = static_cast<long>(rng() % 19) - 9;
        d2n::VMatrix v(n, std::move(a));
        std::string diagnostic;
        bool ok = d2n::verify_disc_identity(v, &diagnostic);
        (ok ? pass : fail) += 1;
        json row = {{"trial", t}, {"pass", ok}};
        if (!ok) row["diagnostic"] = diagnostic;
        records.push_back(std::move(row));
    }
    json params = {{"n", n}, {"trials", trials}};
    json rep = make_report("disc", std::move(params), std::move(records), pass, fail, seed);
    return emit(rep, as_json, clock, [&](const json& r) {
        std::printf("%ld/%ld identity passes\n", r["summary"]["pass"].get<long>(), trials);
        for (const json& row : r["records"])
            if (!row["pass"].get<bool>())
                std::printf("trial %ld: %s\n", row["trial"].get<long>(),
                            row["diagnostic"].get<std::string>().c_str());
    });
}

int cmd_curves_census(const std::string& type, long x, bool as_json) {
    Clock clock;
    curves::CurveFamily fam = curves::make_family(rootsys::parse_label(type));
    Int count = curves::census(fam, Int(x));
    json record = {{"type", type}, {"X", x}, {"count", count.get_str()},
                   {"degrees", fam.degrees}};
    json rep = make_report("curves census", {{"type", type}, {"X", x}},
                           json::array({record}), 1, 0, 0);
    return emit(rep, as_json, clock, [&](const json&) {
        std::printf("%s: %s coefficient tuples of height < %ld\n", type.c_str(),
                    count.get_str().c_str(), x);
    });
}

int cmd_curves_scan(const std::string& type, long p, long trials, std::uint64_t seed,
                    bool as_json) {
    Clock clock;
    curves::CurveFamily fam = curves::make_family(rootsys::parse_label(type));
    bool hyperelliptic = fam.kind == curves::FamilyKind::HyperellipticOdd ||
                         fam.kind == curves::FamilyKind::HyperellipticEven;
    std::mt19937_64 rng(seed);
    long box = p * p;

    json records = json::array();
    long pass = 0, fail = 0;
    for (long t = 0; t < trials; ++t) {
        curves::BPoint b(fam.rank);
        for (Int& v : b) v = static_cast<long>(rng() % (2 * box + 1)) - box;
        curves::SingularFiberReport scan = curves::singular_scan(fam, b, p);

        json row;
        row["trial"] = t;
        json bj = json::array();
        for (const Int& v : b) bj.push_back(v.get_str());
        row["b"] = std::move(bj);
        json points = json::array();
        for (const curves::SingularPoint& pt : scan.points)
            points.push_back({{"x", pt.x},
                              {"y", pt.y},
                              {"class", pt.cls == curves::PointClass::Node ? "node" : "worse"}});
        row["points"] = std::move(points);

        bool ok = true;
        if (hyperelliptic) {
            Int disc = curves::family_disc(fam, b);
            bool vanishes = disc % p == 0;
            int gcd_degree = curves::repeated_root_degree(fam, b, p);
            row["disc_vanishes_mod_p"] = vanishes;
            row["gcd_degree"] = gcd_degree;
            // the scan sees only rational points; the gcd catches the rest
            ok = vanishes == (gcd_degree >= 1) && (scan.points.empty() || vanishes);
        }
        row["consistent"] = ok;
        (ok ? pass : fail) += 1;
        records.push_back(std::move(row));
    }
    json params = {{"type", type}, {"p", p}, {"trials", trials}};
    json rep = make_report("curves scan", std::move(params), std::move(records), pass, fail,
                           seed);
    return emit(rep, as_json, clock, [&](const json& r) {
        for (const json& row : r["records"]) {
            std::printf("trial %ld: %zu singular point(s)%s\n", row["trial"].get<long>(),
                        row["points"].size(), row["consistent"].get<bool>() ? "" : "  MISMATCH");
        }
    });
}

int cmd_curves_nodal(const std::string& type, long p, long trials, std::uint64_t seed,
                     bool as_json) {
    Clock clock;
    curves::CurveFamily fam = curves::make_family(rootsys::parse_label(type));
    curves::NodalSummary stats =
        curves::nodal_statistics(fam, p, static_cast<std::size_t>(trials), seed);

    json record;
    record["type"] = type;
    record["p"] = stats.p;
    record["attempts"] = stats.attempts;
    record["kept"] = stats.kept;
    record["unique_nodes"] = stats.unique_nodes;
    json failures = json::array();
    for (const curves::BPoint& f : stats.failures) {
        json bj = json::array();
        for (const Int& v : f) bj.push_back(v.get_str());
        failures.push_back(std::move(bj));
    }
    record["failures"] = std::move(failures);

    long fail = static_cast<long>(stats.failures.size());
    long pass = static_cast<long>(stats.kept) - fail;
    json params = {{"type", type}, {"p", p}, {"trials", trials}};
    json rep = make_report("curves nodal", std::move(params), json::array({record}), pass,
                           fail, seed);
    return emit(rep, as_json, clock, [&](const json&) {
        std::printf("%d/%d valuation-one samples gave a unique node (%d draws)\n",
                    stats.unique_nodes, stats.kept, stats.attempts);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suite for the theta-group curve families"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the versioned report schema");

    auto* tables = app.add_subcommand("tables", "family table: degrees, pi0, marked points");

    std::string mono_type;
    auto* monodromy = app.add_subcommand("monodromy", "mod-2 monodromy image properties");
    monodromy->add_option("type", mono_type, "diagram label, e.g. E8")->required();

    std::size_t cusp_n = 2;
    std::size_t cusp_cap = cusp::kDefaultEnumCap;
    double budget_seconds = 600.0;
    auto* cuspcmd = app.add_subcommand("cusp", "enumerate and certify cuspidal subsets");
    cuspcmd->add_option("--n", cusp_n, "half-rank of the matrix model")->required();
    cuspcmd->add_option("--cap", cusp_cap, "enumeration size cap");
    cuspcmd->add_option("--budget-seconds", budget_seconds, "wall-clock budget");

    std::size_t disc_n = 2;
    long disc_trials = 100;
    std::uint64_t disc_seed = 0;
    auto* disccmd = app.add_subcommand("disc", "discriminant identity on random matrices");
    disccmd->add_option("--n", disc_n, "half-rank of the matrix model")->required();
    disccmd->add_option("--trials", disc_trials, "number of random samples");
    disccmd->add_option("--seed", disc_seed, "RNG seed");

    auto* curvescmd = app.add_subcommand("curves", "curve family counts and fiber scans");
    curvescmd->require_subcommand(1);
    std::string cur_type = "A2";
    long cur_x = 2, cur_p = 5, cur_trials = 10;
    std::uint64_t cur_seed = 0;
    auto* census = curvescmd->add_subcommand("census", "count tuples below a height");
    census->add_option("--type", cur_type, "diagram label")->required();
    census->add_option("--X", cur_x, "height bound")->required();
    auto* scan = curvescmd->add_subcommand("scan", "singular points of random fibers mod p");
    scan->add_option("--type", cur_type, "diagram label")->required();
    scan->add_option("--p", cur_p, "prime > 3")->required();
    scan->add_option("--trials", cur_trials, "number of random fibers");
    scan->add_option("--seed", cur_seed, "RNG seed");
    auto* nodal = curvescmd->add_subcommand("nodal", "node classification statistics");
    nodal->add_option("--type", cur_type, "diagram label")->required();
    nodal->add_option("--p", cur_p, "prime > 3")->required();
    nodal->add_option("--trials", cur_trials, "valuation-one samples to keep");
    nodal->add_option("--seed", cur_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*tables) return cmd_tables(as_json);
        if (*monodromy) return cmd_monodromy(mono_type, as_json);
        if (*cuspcmd) return cmd_cusp(cusp_n, cusp_cap, budget_seconds, as_json);
        if (*disccmd) return cmd_disc(disc_n, disc_trials, disc_seed, as_json);
        if (*census) return cmd_curves_census(cur_type, cur_x, as_json);
        if (*scan) return cmd_curves_scan(cur_type, cur_p, cur_trials, cur_seed, as_json);
        if (*nodal) return cmd_curves_nodal(cur_type, cur_p, cur_trials, cur_seed, as_json);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const cusp::EnumerationCapError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
