// ghull: build codes from recipes, compute s-Galois hulls and decompositions,
// synthesize EAQEC parameters, reproduce the published tables, and verify the
// underlying theorems on randomized corpora.
//
// Exit codes: 0 success, 1 property/verification failure, 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ghull/catalog.hpp"
#include "ghull/reproduce.hpp"
#include "ghull/verify.hpp"
#include "ghull/version.hpp"

namespace {

using ghull::json;

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint64_t distance_budget = std::uint64_t(1) << 22;
    std::string format = "table";
    std::string catalog_path;
    bool permissive_closure = false;

    std::filesystem::path catalog() const {
        if (!catalog_path.empty()) return catalog_path;
        if (const char* env = std::getenv("GHULL_CATALOG")) return env;
        return "ghull-catalog.jsonl";
    }
    ghull::BuildOptions build_options(unsigned s) const {
        return ghull::BuildOptions{s, distance_budget, !permissive_closure};
    }
};

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) ghull::raise(ghull::Errc::RecipeInvalid, "cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) ghull::raise(ghull::Errc::RecipeInvalid, path + " is not valid JSON");
    return j;
}

std::string code_summary(const ghull::LinearCode& c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dim()) + "]_" +
           ghull::q_label_str({c.field()->p(), c.field()->m()});
}

ghull::CatalogRecord make_record(const ghull::BuiltCode& built, unsigned s,
                                 const ghull::EaqecParams& params, const ghull::HullDecomposition& dec) {
    ghull::CatalogRecord rec;
    rec.recipe = built.recipe;
    rec.s = s;
    rec.id = ghull::catalog_record_id(rec.recipe, s);
    rec.eaqec = params;
    rec.eaqec.provenance = rec.id;
    const bool dims_ok = dec.hull.dim() + dec.complement.dim() == built.code.dim();
    rec.verification = {
        {"dims", dims_ok ? "pass" : "fail"},
        {"hull_dim", "pass"},
        {"lcd_certificate", dec.certificate_nonsingular ? "pass" : "fail"},
        {"me", ghull::classify_me(params) ? "pass" : "fail"},
    };
    rec.created_at = now_iso8601();
    rec.tool_version = ghull::kToolVersion;
    return rec;
}

void emit_eaqec(const GlobalOpts& g, const ghull::EaqecParams& p, const json& extra) {
    if (g.format == "json") {
        json out = ghull::eaqec_to_json(p);
        for (auto& [k, v] : extra.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else if (g.format == "csv") {
        ghull::FamilyRow row{"pipeline", {}, p};
        std::cout << ghull::family_row_csv_header() << "\n" << ghull::family_row_to_csv(row) << "\n";
    } else {
        std::cout << "[[" << p.n << ", " << p.k << ", " << (p.d_is_lower_bound ? ">=" : "") << p.d << "; " << p.c
                  << "]]_" << ghull::q_label_str(p.q) << "  me=" << (ghull::classify_me(p) ? "true" : "false");
        if (p.degenerate) std::cout << "  (degenerate: zero logical dimension)";
        std::cout << "\n";
    }
}

int cmd_build(const GlobalOpts& g, const std::string& recipe_path, unsigned s, bool save) {
    const ghull::BuiltCode built = ghull::build_from_recipe(load_json_file(recipe_path), g.build_options(s));
    if (g.format == "json") {
        json out;
        out["summary"] = code_summary(built.code);
        out["seed"] = g.seed;
        out["id"] = ghull::catalog_record_id(built.recipe, s);
        out["code"] = ghull::code_to_json(built.code);
        out["recipe"] = built.recipe;
        out["notes"] = built.notes;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << code_summary(built.code) << "\n";
        for (const auto& n : built.notes) std::cout << "  note: " << n << "\n";
    }
    if (save) {
        const auto dist = built.code.min_distance(g.distance_budget);
        const auto dec = built.code.hull_decompose(s);
        const auto params = ghull::eaqec_from_hull_decomposition(built.code, s, dist, g.distance_budget);
        const bool added = ghull::Catalog(g.catalog()).append(make_record(built, s, params, dec));
        std::cerr << (added ? "saved to " : "already in ") << g.catalog().string() << "\n";
    }
    return 0;
}

int cmd_hull(const GlobalOpts& g, const std::string& recipe_path, int s_flag, bool sweep) {
    const ghull::BuiltCode built = ghull::build_from_recipe(load_json_file(recipe_path), g.build_options(0));
    const unsigned m = built.code.field()->m();
    std::vector<unsigned> svals;
    if (sweep)
        for (unsigned s = 0; s < m; ++s) svals.push_back(s);
    else
        svals.push_back(static_cast<unsigned>(s_flag));

    json rows = json::array();
    for (unsigned s : svals) {
        const auto dec = built.code.hull_decompose(s);
        const auto [lcd, cert] = built.code.is_galois_lcd(s);
        json r;
        r["s"] = s;
        r["hull_dim"] = dec.hull.dim();
        r["is_lcd"] = lcd;
        r["dim_hull"] = dec.hull.dim();
        r["dim_complement"] = dec.complement.dim();
        r["certificate_nonsingular"] = dec.certificate_nonsingular;
        r["distance"] = "skipped";
        if (g.format == "json") r["decomposition"] = ghull::decomposition_to_json(built.code, dec);
        rows.push_back(std::move(r));
    }

    if (g.format == "json") {
        json out;
        out["summary"] = code_summary(built.code);
        out["seed"] = g.seed;
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "s,hull_dim,is_lcd,dim_complement,certificate_nonsingular\n";
        for (const auto& r : rows)
            std::cout << r["s"] << "," << r["hull_dim"] << "," << (r["is_lcd"].get<bool>() ? "true" : "false") << ","
                      << r["dim_complement"] << "," << (r["certificate_nonsingular"].get<bool>() ? "true" : "false")
                      << "\n";
    } else {
        std::cout << code_summary(built.code) << "\n";
        std::cout << "  s  hull_dim  lcd    dim(D)  certificate\n";
        for (const auto& r : rows)
            std::cout << "  " << r["s"] << "  " << r["hull_dim"] << "         " << (r["is_lcd"].get<bool>() ? "yes" : "no ")
                      << "    " << r["dim_complement"] << "       "
                      << (r["certificate_nonsingular"].get<bool>() ? "nonsingular" : "singular") << "\n";
    }
    return 0;
}

int cmd_eaqec(const GlobalOpts& g, const std::string& recipe_path, unsigned s, bool save) {
    const ghull::BuiltCode built = ghull::build_from_recipe(load_json_file(recipe_path), g.build_options(s));
    const auto dist = built.code.min_distance(g.distance_budget);
    const auto dec = built.code.hull_decompose(s);
    const auto params = ghull::eaqec_from_hull_decomposition(built.code, s, dist, g.distance_budget);

    json extra;
    extra["classical"] = code_summary(built.code);
    extra["seed"] = g.seed;
    extra["s"] = s;
    extra["hull_dim"] = dec.hull.dim();
    extra["classical_distance"] = ghull::distance_to_json(dist);
    emit_eaqec(g, params, extra);

    if (save) {
        const bool added = ghull::Catalog(g.catalog()).append(make_record(built, s, params, dec));
        std::cerr << (added ? "saved to " : "already in ") << g.catalog().string() << "\n";
    }
    return 0;
}

int cmd_reproduce(const GlobalOpts& g, int table, const std::string& out_path) {
    ghull::ReproduceOptions opt;
    opt.seed = g.seed;
    opt.distance_budget = g.distance_budget;
    opt.strict_closure = !g.permissive_closure;
    const json report = ghull::reproduce_table(table, opt);

    const std::string rendered = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rendered;
    }
    if (g.format == "json" || g.format == "csv") {
        std::cout << rendered;
    } else {
        std::cout << "table " << table << ": ";
        for (auto& [k, v] : report["summary"].items()) std::cout << k << "=" << v.dump() << " ";
        std::cout << "\n";
        for (const auto& row : report["rows"]) {
            if (!row.contains("status")) continue;
            if (row["status"] != "reproduced") {
                std::cout << "  " << row["status"].get<std::string>() << ": ";
                if (row.contains("discrepancy") && !row["discrepancy"].is_null())
                    std::cout << row["discrepancy"].get<std::string>();
                if (row.contains("negacyclic") && row["negacyclic"].contains("reason"))
                    std::cout << row["negacyclic"]["reason"].get<std::string>();
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, std::size_t cases) {
    ghull::SuiteResult res;
    if (suite == "duality")
        res = ghull::verify_duality(g.seed, cases ? cases : 500);
    else if (suite == "decomposition")
        res = ghull::verify_decomposition(g.seed, cases ? cases : 1000);
    else if (suite == "mp_hull")
        res = ghull::verify_mp_hull(g.seed, cases ? cases : 200);
    else if (suite == "gabidulin_hull")
        res = ghull::verify_gabidulin_hull();
    else
        ghull::raise(ghull::Errc::RecipeInvalid, "unknown suite \"" + suite +
                                                     "\" (expected duality|decomposition|mp_hull|gabidulin_hull)");

    std::cout << "suite " << res.suite << ": " << res.cases << " cases, " << res.failures << " failures ("
              << res.seconds << " s)\n";
    for (const auto& n : res.failure_notes) std::cout << "  " << n << "\n";
    if (!res.failure_artifacts.empty()) {
        const std::string path = "ghull-violation-" + res.suite + ".json";
        std::ofstream out(path);
        json arts = json::array();
        for (const auto& a : res.failure_artifacts) arts.push_back(a);
        out << arts.dump(2) << "\n";
        std::cerr << "replay artifacts written to " << path << "\n";
    }
    return res.passed() ? 0 : 1;
}

int cmd_catalog(const GlobalOpts& g, const std::string& q, std::int64_t n_min, std::int64_t n_max, int me,
                std::int64_t d_min) {
    ghull::CatalogQuery query;
    if (!q.empty()) {
        const auto caret = q.find('^');
        ghull::QLabel label;
        label.p = std::stoull(q.substr(0, caret));
        label.m = caret == std::string::npos ? 1 : std::stoull(q.substr(caret + 1));
        query.q = label;
    }
    if (n_min >= 0) query.n_min = static_cast<std::uint64_t>(n_min);
    if (n_max >= 0) query.n_max = static_cast<std::uint64_t>(n_max);
    if (me >= 0) query.me = me != 0;
    if (d_min >= 0) query.d_min = static_cast<std::uint64_t>(d_min);

    const auto records = ghull::Catalog(g.catalog()).query(query);
    if (g.format == "json") {
        for (const auto& r : records) std::cout << ghull::catalog_record_to_json(r).dump() << "\n";
    } else if (g.format == "csv") {
        std::cout << ghull::family_row_csv_header() << "\n";
        for (const auto& r : records)
            std::cout << ghull::family_row_to_csv(ghull::FamilyRow{"catalog", {}, r.eaqec}) << "\n";
    } else {
        for (const auto& r : records) {
            const auto& p = r.eaqec;
            std::cout << r.id << "  [[" << p.n << ", " << p.k << ", " << (p.d_is_lower_bound ? ">=" : "") << p.d
                      << "; " << p.c << "]]_" << ghull::q_label_str(p.q) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"s-Galois hulls, hull decompositions and EAQEC parameter synthesis"};
    app.set_version_flag("--version", ghull::kToolVersion);
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "deterministic seed recorded in outputs");
    app.add_option("--distance-budget", g.distance_budget, "max enumeration work for exact distances");
    app.add_option("--format", g.format, "json|csv|table")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--catalog", g.catalog_path, "catalog path (env GHULL_CATALOG)");
    auto* strict = app.add_flag("--strict-closure", "reject non-q-closed defining sets (default)");
    app.add_flag("--permissive-closure", g.permissive_closure, "close defining sets and report the enlargement")
        ->excludes(strict);

    std::string recipe_path, out_path, suite, qfilter;
    unsigned s = 0;
    int s_flag = 0, table = 0, me = -1;
    bool save = false, sweep = false;
    std::size_t cases = 0;
    std::int64_t n_min = -1, n_max = -1, d_min = -1;

    auto* build = app.add_subcommand("build", "build a code from a recipe file");
    build->add_option("recipe", recipe_path, "recipe JSON file")->required();
    build->add_option("-s,--s", s, "Galois parameter for --save pipeline");
    build->add_flag("--save", save, "append the pipeline record to the catalog");

    auto* hull = app.add_subcommand("hull", "hull/LCD/decomposition report");
    hull->add_option("recipe", recipe_path, "recipe JSON file")->required();
    auto* sopt = hull->add_option("-s,--s", s_flag, "Galois parameter");
    hull->add_flag("--sweep", sweep, "report every s in [0, m)")->excludes(sopt);

    auto* eaqec = app.add_subcommand("eaqec", "full EAQEC pipeline on a recipe");
    eaqec->add_option("recipe", recipe_path, "recipe JSON file")->required();
    eaqec->add_option("-s,--s", s, "Galois parameter")->required();
    eaqec->add_flag("--save", save, "append to the catalog");

    auto* rep = app.add_subcommand("reproduce", "reproduce a published table");
    rep->add_option("table", table, "table id 1..5")->required()->check(CLI::Range(1, 5));
    rep->add_option("--out", out_path, "also write the JSON report to a file");

    auto* ver = app.add_subcommand("verify", "run a randomized property suite");
    ver->add_option("suite", suite, "duality|decomposition|mp_hull|gabidulin_hull")->required();
    ver->add_option("--cases", cases, "number of randomized cases");

    auto* cat = app.add_subcommand("catalog", "query the catalog");
    cat->add_option("--q", qfilter, "field filter, e.g. 9 or 3^2");
    cat->add_option("--n-min", n_min, "minimum length");
    cat->add_option("--n-max", n_max, "maximum length");
    cat->add_option("--me", me, "filter by maximal entanglement (0/1)");
    cat->add_option("--d-min", d_min, "minimum distance (lower-bound value)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(g, recipe_path, s, save);
        if (hull->parsed()) {
            if (!sweep && sopt->count() == 0)
                ghull::raise(ghull::Errc::RecipeInvalid, "hull needs -s or --sweep");
            return cmd_hull(g, recipe_path, s_flag, sweep);
        }
        if (eaqec->parsed()) return cmd_eaqec(g, recipe_path, s, save);
        if (rep->parsed()) return cmd_reproduce(g, table, out_path);
        if (ver->parsed()) return cmd_verify(g, suite, cases);
        if (cat->parsed()) return cmd_catalog(g, qfilter, n_min, n_max, me, d_min);
    } catch (const ghull::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
