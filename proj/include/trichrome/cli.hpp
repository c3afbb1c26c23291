#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "cliques.hpp"
#include "coloring.hpp"
#include "constructions.hpp"
#include "exact.hpp"
#include "extract.hpp"
#include "patterns.hpp"

namespace trichrome {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

namespace cli_detail {

using nlohmann::json;

inline json witness_json(const CliqueWitness& w) {
    return json{{"vertices", w.vertices},
                {"size", w.size()},
                {"colors_used", w.colors_used.to_string()}};
}

inline json coloring_json(const EdgeColoring& c) {
    return json{{"n", c.n()}, {"edges", c.to_string()}};
}

inline EdgeColoring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    return EdgeColoring::read(in);
}

struct Emitter {
    std::string command;
    json parameters;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int emit(std::ostream& out, const json& result, int code) const {
        json doc{{"schema_version", kSchemaVersion},
                 {"command", command},
                 {"parameters", parameters},
                 {"versions", {{"trichrome", kVersion}}},
                 {"wall_time_ms",
                  std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count()},
                 {"result", result}};
        out << doc.dump(2) << "\n";
        return code;
    }
};

}  // namespace cli_detail

// One entry point for all subcommands; returns the process exit code.
// 0 = success, 1 = a verification failed (counterexample in the report),
// 2 = usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    using cli_detail::Emitter;
    using nlohmann::json;

    CLI::App app{"three-color triangle-pattern toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "cap on worker threads");

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "pattern-family orbit catalog");
    int orbits_k = 1;
    std::string orbits_format = "json";
    orbits_cmd->add_option("--k", orbits_k, "family size, 1..3")->required();
    orbits_cmd->add_option("--format", orbits_format, "json|table");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a construction coloring");
    int gen_id = 0, gen_n = 0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    bool gen_with_h2 = false;
    gen_cmd->add_option("--id", gen_id, "construction id, 1..17")->required();
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--seed", gen_seed, "seed for randomized constructions");
    gen_cmd->add_option("--out", gen_out, "output file, - for stdout")->required();
    gen_cmd->add_flag("--with-h2", gen_with_h2, "also report the solved h2");

    // check
    auto* check_cmd = app.add_subcommand("check", "test a coloring against a family");
    std::string check_file, check_family;
    check_cmd->add_option("--coloring", check_file)->required();
    check_cmd->add_option("--family", check_family)->required();

    // h2
    auto* h2_cmd = app.add_subcommand("h2", "largest two-colored clique of a coloring");
    std::string h2_file, h2_format = "json";
    h2_cmd->add_option("--coloring", h2_file)->required();
    h2_cmd->add_option("--format", h2_format, "json");

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "exact minimum h2 over avoiding colorings");
    int exact_n = 0;
    std::string exact_family;
    uint64_t exact_budget = 400'000'000;
    exact_cmd->add_option("--n", exact_n)->required();
    exact_cmd->add_option("--family", exact_family)->required();
    exact_cmd->add_option("--budget", exact_budget, "search node budget");

    // fg
    auto* fg_cmd = app.add_subcommand("fg", "triangle-free / odd-girth graph minima");
    std::string fg_which;
    int fg_n = 0, fg_cap = 10;
    fg_cmd->add_option("--which", fg_which, "f|g")->required();
    fg_cmd->add_option("--n", fg_n)->required();
    fg_cmd->add_option("--cap", fg_cap, "enumeration cap");

    // extract
    auto* ex_cmd = app.add_subcommand("extract", "certified two-colored clique witness");
    std::string ex_file, ex_family;
    ex_cmd->add_option("--coloring", ex_file)->required();
    ex_cmd->add_option("--family", ex_family)->required();

    // verify-constructions
    auto* vc_cmd = app.add_subcommand("verify-constructions", "sweep construction claims");
    std::string vc_id = "all";
    int vc_nmin = 3, vc_nmax = 30;
    uint64_t vc_seed = 0;
    vc_cmd->add_option("--id", vc_id, "construction id or 'all'");
    vc_cmd->add_option("--n-min", vc_nmin);
    vc_cmd->add_option("--n-max", vc_nmax);
    vc_cmd->add_option("--seed", vc_seed);

    // verify-tables
    auto* vt_cmd = app.add_subcommand("verify-tables", "check the results tables");
    int vt_exact_n = 5;
    std::vector<int> vt_sweep{50, 100, 200};
    uint64_t vt_seed = 0;
    std::string vt_format = "json";
    vt_cmd->add_option("--exact-n", vt_exact_n, "largest n for exact searches");
    vt_cmd->add_option("--sweep-n", vt_sweep, "construction sweep sizes");
    vt_cmd->add_option("--seed", vt_seed);
    vt_cmd->add_option("--format", vt_format, "json|markdown");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (orbits_cmd->parsed()) {
            Emitter em{"orbits", json{{"k", orbits_k}, {"format", orbits_format}}};
            OrbitCatalog cat = enumerate_orbits(orbits_k);
            json reps = json::array();
            for (const auto& rep : cat.representatives) {
                int orbit = cat.orbit_size(rep);
                reps.push_back(json{{"family", rep.to_string()},
                                    {"orbit_size", orbit},
                                    {"stabilizer_size", (int)family_stabilizer(rep).size()}});
            }
            if (orbits_format == "table") {
                out << "family\torbit\tstabilizer\n";
                for (const auto& r : reps)
                    out << r["family"].get<std::string>() << "\t" << r["orbit_size"] << "\t"
                        << r["stabilizer_size"] << "\n";
                return 0;
            }
            return em.emit(out,
                           json{{"k", orbits_k},
                                {"count", (int)cat.representatives.size()},
                                {"representatives", reps}},
                           0);
        }

        if (gen_cmd->parsed()) {
            Emitter em{"gen", json{{"id", gen_id},
                                   {"n", gen_n},
                                   {"seed", gen_seed},
                                   {"out", gen_out}}};
            ConstructionSpec pre = construction_spec(gen_id);
            GeneratedColoring gc = pre.deterministic ? generate(gen_id, gen_n)
                                                     : generate(gen_id, gen_n, gen_seed);
            if (gen_out == "-") {
                gc.coloring.write(out);
            } else {
                std::ofstream f(gen_out);
                if (!f) throw std::runtime_error("cannot write " + gen_out);
                gc.coloring.write(f);
            }
            std::string avoided;
            for (const auto& p : gc.spec.avoided) {
                if (!avoided.empty()) avoided += ',';
                avoided += p.to_string();
            }
            json res{{"id", gen_id},
                     {"n", gen_n},
                     {"name", gc.spec.name},
                     {"deterministic", gc.spec.deterministic},
                     {"avoided_patterns", avoided},
                     {"order", gc.spec.order_expr}};
            if (gen_with_h2) res["h2"] = h2_of_coloring(gc.coloring).value;
            if (gen_out == "-") return 0;
            return em.emit(out, res, 0);
        }

        if (check_cmd->parsed()) {
            Emitter em{"check", json{{"coloring", check_file}, {"family", check_family}}};
            EdgeColoring c = cli_detail::load_coloring(check_file);
            PatternFamily F = PatternFamily::parse(check_family);
            auto hit = find_pattern_from(c, F);
            json res{{"n", c.n()},
                     {"family", F.to_string()},
                     {"avoiding", !hit.has_value()}};
            if (hit)
                res["violating_triangle"] = json{{"vertices", hit->vertices},
                                                 {"pattern", hit->pattern.to_string()}};
            return em.emit(out, res, hit ? 1 : 0);
        }

        if (h2_cmd->parsed()) {
            Emitter em{"h2", json{{"coloring", h2_file}}};
            EdgeColoring c = cli_detail::load_coloring(h2_file);
            TwoColorProfile p = two_color_profile(c);
            H2Result h = h2_of_coloring(c);
            json res{{"n", c.n()},
                     {"s_rb", p.s_rb},
                     {"s_ry", p.s_ry},
                     {"s_by", p.s_by},
                     {"h2", h.value},
                     {"witness", cli_detail::witness_json(h.witness)}};
            if (c.n() < 3) res["small_n_flag"] = "h2 equals n below 3 vertices by convention";
            return em.emit(out, res, 0);
        }

        if (exact_cmd->parsed()) {
            Emitter em{"exact", json{{"n", exact_n},
                                     {"family", exact_family},
                                     {"budget", exact_budget}}};
            PatternFamily F = PatternFamily::parse(exact_family);
            auto [canon, perm] = canonical_family(F);
            ExactOptions opt;
            opt.node_budget = exact_budget;
            ExactResult r = exact_h2(exact_n, F, opt);
            json res{{"n", exact_n},
                     {"family", F.to_string()},
                     {"canonical_family", canon.to_string()},
                     {"canonicalizing_permutation", perm.to_string()},
                     {"status", r.status_name()},
                     {"nodes_explored", r.nodes_explored}};
            if (r.status == ExactResult::Status::Exact) res["value"] = r.value;
            if (r.status == ExactResult::Status::Interval) {
                res["lower"] = r.lower;
                res["upper"] = r.upper;
            }
            if (r.extremal_witness)
                res["extremal_witness"] = cli_detail::coloring_json(*r.extremal_witness);
            if (exact_n < 3) res["small_n_flag"] = "h2 equals n below 3 vertices by convention";
            return em.emit(out, res, 0);
        }

        if (fg_cmd->parsed()) {
            Emitter em{"fg", json{{"which", fg_which}, {"n", fg_n}, {"cap", fg_cap}}};
            if (fg_which != "f" && fg_which != "g")
                throw std::invalid_argument("--which must be f or g");
            GraphSearchResult r =
                fg_which == "f" ? f_exact(fg_n, fg_cap) : g_exact(fg_n, fg_cap);
            json edges = json::array();
            for (auto [u, v] : r.witness.edges()) edges.push_back(json::array({u, v}));
            return em.emit(out,
                           json{{"which", fg_which},
                                {"n", fg_n},
                                {"value", r.value},
                                {"witness_graph", json{{"n", r.witness.n()}, {"edges", edges}}},
                                {"classes_considered", r.count_considered}},
                           0);
        }

        if (ex_cmd->parsed()) {
            Emitter em{"extract", json{{"coloring", ex_file}, {"family", ex_family}}};
            EdgeColoring c = cli_detail::load_coloring(ex_file);
            PatternFamily F = PatternFamily::parse(ex_family);
            auto [canon, perm] = canonical_family(F);
            ExtractionOutcome o = extract_dispatch(c, F);
            return em.emit(out,
                           json{{"family", F.to_string()},
                                {"canonical_family", canon.to_string()},
                                {"lemma_id", o.lemma_id},
                                {"guarantee", o.guarantee},
                                {"witness", cli_detail::witness_json(o.witness)},
                                {"colors_used", o.witness.colors_used.to_string()}},
                           0);
        }

        if (vc_cmd->parsed()) {
            Emitter em{"verify-constructions", json{{"id", vc_id},
                                                    {"n_min", vc_nmin},
                                                    {"n_max", vc_nmax},
                                                    {"seed", vc_seed}}};
            std::vector<int> ids;
            if (vc_id == "all")
                for (int i = 1; i <= 17; ++i) ids.push_back(i);
            else
                ids.push_back(std::stoi(vc_id));
            json reports = json::array();
            bool all_ok = true;
            for (int id : ids) {
                ConstructionReport rep = verify_claims(id, vc_nmin, vc_nmax, vc_seed, threads);
                all_ok = all_ok && rep.all_ok;
                json rows = json::array();
                for (const auto& row : rep.rows) {
                    json r{{"n", row.n},
                           {"avoiding", row.avoiding},
                           {"h2", row.h2},
                           {"ok", row.ok}};
                    if (row.bound >= 0) r["bound"] = row.bound;
                    r["bound_checked"] = row.bound_checked;
                    if (!row.detail.empty()) r["detail"] = row.detail;
                    rows.push_back(std::move(r));
                }
                reports.push_back(json{{"id", rep.id},
                                       {"name", rep.name},
                                       {"order", rep.order_expr},
                                       {"all_ok", rep.all_ok},
                                       {"rows", rows}});
            }
            return em.emit(out, json{{"all_ok", all_ok}, {"constructions", reports}},
                           all_ok ? 0 : 1);
        }

        if (vt_cmd->parsed()) {
            Emitter em{"verify-tables", json{{"exact_n", vt_exact_n},
                                             {"sweep_n", vt_sweep},
                                             {"seed", vt_seed}}};
            VerifyTablesOptions opt;
            opt.exact_n_max = vt_exact_n;
            opt.sweep_ns = vt_sweep;
            opt.seed = vt_seed;
            opt.threads = threads;
            TablesReport rep = verify_tables(opt);
            if (vt_format == "markdown") {
                out << "| family | kind | ok | notes |\n|---|---|---|---|\n";
                for (const auto& chk : rep.checks) {
                    std::string notes;
                    for (const auto& f : chk.failures) notes += "FAIL: " + f + "; ";
                    for (const auto& w : chk.warnings) notes += "warn: " + w + "; ";
                    out << "| " << chk.listed_as << " | " << chk.kind << " | "
                        << (chk.ok ? "yes" : "NO") << " | " << notes << " |\n";
                }
                return rep.all_ok ? 0 : 1;
            }
            json checks = json::array();
            for (const auto& chk : rep.checks)
                checks.push_back(json{{"family", chk.listed_as},
                                      {"canonical", chk.family},
                                      {"kind", chk.kind},
                                      {"ok", chk.ok},
                                      {"failures", chk.failures},
                                      {"warnings", chk.warnings},
                                      {"info", chk.info}});
            return em.emit(out,
                           json{{"all_ok", rep.all_ok},
                                {"failures", rep.failures},
                                {"warnings", rep.warnings},
                                {"entries", checks}},
                           rep.all_ok ? 0 : 1);
        }
    } catch (const precondition_violation& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace trichrome
