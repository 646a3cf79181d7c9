#include "ghull/serialize.hpp"

#include <algorithm>

namespace ghull {

namespace {

[[noreturn]] void bad_recipe(const std::string& what) { raise(Errc::RecipeInvalid, what); }

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) bad_recipe(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::uint64_t need_u64(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned() && !v.is_number_integer()) bad_recipe(std::string("\"") + key + "\" must be an integer");
    if (v.is_number_integer() && v.get<std::int64_t>() < 0) bad_recipe(std::string("\"") + key + "\" must be >= 0");
    return v.get<std::uint64_t>();
}

}  // namespace

json field_to_json(const FiniteField& f) {
    json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["modulus"] = f.modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    const std::uint64_t p = need_u64(j, "p");
    const std::uint64_t m = need_u64(j, "m");
    std::optional<std::vector<std::uint64_t>> mod;
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_array()) bad_recipe("\"modulus\" must be a coefficient array");
        mod = j.at("modulus").get<std::vector<std::uint64_t>>();
    }
    try {
        return FiniteField::create(p, static_cast<unsigned>(m), std::move(mod));
    } catch (const Error& e) {
        bad_recipe(std::string("field descriptor rejected: ") + e.what());
    }
}

json matrix_to_json(const Matrix& m) {
    json j;
    j["field"] = field_to_json(*m.field());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field()->coeffs(m.get(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const json& j) {
    FieldPtr f = field_from_json(need(j, "field"));
    const std::size_t rows = need_u64(j, "rows");
    const std::size_t cols = need_u64(j, "cols");
    const json& entries = need(j, "entries");
    if (!entries.is_array() || entries.size() != rows) bad_recipe("\"entries\" must have `rows` rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = entries.at(r);
        if (!row.is_array() || row.size() != cols) bad_recipe("entry row " + std::to_string(r) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto coeffs = row.at(c).get<std::vector<std::uint64_t>>();
            m.set(r, c, f->from_coeffs(coeffs));
        }
    }
    return m;
}

json code_to_json(const LinearCode& c) {
    json j;
    j["field"] = field_to_json(*c.field());
    j["n"] = c.length();
    j["k"] = c.dim();
    j["generator"] = matrix_to_json(c.generator());
    return j;
}

LinearCode code_from_json(const json& j) {
    Matrix g = matrix_from_json(need(j, "generator"));
    if (g.rows() == 0) {
        FieldPtr f = field_from_json(need(j, "field"));
        return LinearCode::zero_code(f, need_u64(j, "n"));
    }
    return LinearCode::from_generator(g);
}

json decomposition_to_json(const LinearCode& c, const HullDecomposition& d) {
    json j = code_to_json(c);
    j["s"] = d.s;
    j["hull"] = d.hull.is_zero() ? json(nullptr) : code_to_json(d.hull);
    j["complement"] = code_to_json(d.complement);
    j["lcd_certificate_nonsingular"] = d.certificate_nonsingular;
    return j;
}

json distance_to_json(const DistanceReport& d) {
    json j;
    j["value"] = d.value;
    j["exactness"] = d.exact() ? "exact" : "lower_bound";
    switch (d.method) {
        case DistanceReport::Method::exhaustive_messages: j["method"] = "exhaustive_messages"; break;
        case DistanceReport::Method::exhaustive_codewords: j["method"] = "exhaustive_codewords"; break;
        case DistanceReport::Method::structural_bound: j["method"] = "structural_bound"; break;
    }
    j["work_budget_used"] = d.work_used;
    return j;
}

std::string q_label_str(const QLabel& q) {
    if (q.m == 1) return std::to_string(q.p);
    return std::to_string(q.p) + "^" + std::to_string(q.m);
}

json eaqec_to_json(const EaqecParams& p) {
    json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["d_lb"] = p.d_is_lower_bound;
    j["c"] = p.c;
    j["q"] = json{{"p", p.q.p}, {"m", p.q.m}};
    j["me"] = classify_me(p);
    j["degenerate"] = p.degenerate;
    if (!p.provenance.empty()) j["provenance"] = p.provenance;
    return j;
}

json family_row_to_json(const FamilyRow& row, const json& paper_printed, const std::string& discrepancy) {
    json j;
    j["family"] = row.family;
    json in = json::object();
    for (const auto& [k, v] : row.inputs) in[k] = v;
    j["inputs"] = std::move(in);
    j["n"] = row.out.n;
    j["k"] = row.out.k;
    j["d"] = row.out.d;
    j["d_lb"] = row.out.d_is_lower_bound;
    j["c"] = row.out.c;
    j["q"] = q_label_str(row.out.q);
    j["me"] = classify_me(row.out);
    j["paper_printed"] = paper_printed;
    j["discrepancy"] = discrepancy.empty() ? json(nullptr) : json(discrepancy);
    return j;
}

std::string family_row_csv_header() { return "q,n,k,d,d_lb,c,me,family,discrepancy"; }

std::string family_row_to_csv(const FamilyRow& row, const std::string& discrepancy) {
    std::string s;
    s += q_label_str(row.out.q);
    s += ',';
    s += std::to_string(row.out.n);
    s += ',';
    s += std::to_string(row.out.k);
    s += ',';
    s += std::to_string(row.out.d);
    s += ',';
    s += row.out.d_is_lower_bound ? "true" : "false";
    s += ',';
    s += std::to_string(row.out.c);
    s += ',';
    s += classify_me(row.out) ? "true" : "false";
    s += ',';
    s += row.family;
    s += ',';
    s += discrepancy;
    return s;
}

// ---------------------------------------------------------------------- recipes

namespace {

Matrix matrix_from_recipe_block(const FieldPtr& f, const json& j) {
    const std::size_t rows = need_u64(j, "rows");
    const std::size_t cols = need_u64(j, "cols");
    Matrix m(f, rows, cols);
    if (j.contains("entries_int")) {
        const json& e = j.at("entries_int");
        if (!e.is_array() || e.size() != rows) bad_recipe("\"entries_int\" must have `rows` rows");
        for (std::size_t r = 0; r < rows; ++r) {
            if (e.at(r).size() != cols) bad_recipe("entries_int row " + std::to_string(r) + " has wrong length");
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f->from_int(e.at(r).at(c).get<std::int64_t>()));
        }
        return m;
    }
    const json& e = need(j, "entries");
    if (!e.is_array() || e.size() != rows) bad_recipe("\"entries\" must have `rows` rows");
    for (std::size_t r = 0; r < rows; ++r) {
        if (e.at(r).size() != cols) bad_recipe("entries row " + std::to_string(r) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, f->from_coeffs(e.at(r).at(c).get<std::vector<std::uint64_t>>()));
    }
    return m;
}

BuiltCode build_explicit(const json& recipe) {
    FieldPtr f = field_from_json(need(recipe, "field"));
    Matrix g = matrix_from_recipe_block(f, need(recipe, "generator"));
    json norm;
    norm["kind"] = "explicit";
    norm["field"] = field_to_json(*f);
    json gen;
    gen["rows"] = g.rows();
    gen["cols"] = g.cols();
    json entries = json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(f->coeffs(g.get(r, c)));
        entries.push_back(std::move(row));
    }
    gen["entries"] = std::move(entries);
    norm["generator"] = std::move(gen);
    try {
        return BuiltCode{LinearCode::from_generator(g), std::move(norm), {}};
    } catch (const Error& e) {
        bad_recipe(std::string("explicit generator rejected: ") + e.what());
    }
}

BuiltCode build_root_set(const json& recipe, const BuildOptions& opt, bool negacyclic) {
    FieldPtr f = field_from_json(need(recipe, "field"));
    const std::uint64_t n = need_u64(recipe, "n");
    const json& ej = need(recipe, "exponents");
    if (!ej.is_array()) bad_recipe("\"exponents\" must be an array");
    std::vector<std::uint64_t> exps = ej.get<std::vector<std::uint64_t>>();

    RootSetOptions ropt;
    ropt.strict_closure = opt.strict_closure;
    if (recipe.contains("root_power")) ropt.root_power = recipe.at("root_power").get<std::uint64_t>();

    RootSetCode rs = negacyclic ? negacyclic_code(f, n, exps, ropt) : cyclic_code(f, n, exps, ropt);

    json norm;
    norm["kind"] = negacyclic ? "negacyclic" : "cyclic";
    norm["field"] = field_to_json(*f);
    norm["n"] = n;
    norm["exponents"] = rs.requested_exponents;
    if (ropt.root_power) norm["root_power"] = *ropt.root_power;

    BuiltCode out{rs.code, std::move(norm), {}};
    if (rs.closure_enlarged) {
        std::string note = "closure enlarged defining set to {";
        for (std::size_t i = 0; i < rs.closed_exponents.size(); ++i)
            note += (i ? "," : "") + std::to_string(rs.closed_exponents[i]);
        note += "}";
        out.notes.push_back(std::move(note));
    }
    out.notes.push_back("bch_lower_bound=" + std::to_string(rs.bch_lower_bound));
    return out;
}

BuiltCode build_gabidulin(const json& recipe) {
    FieldPtr base = field_from_json(need(recipe, "base"));
    const unsigned ext = static_cast<unsigned>(need_u64(recipe, "ext"));
    const unsigned k = static_cast<unsigned>(need_u64(recipe, "k"));
    auto tower = make_extension(base, ext);

    std::vector<rep_t> basis;
    bool self_dual_requested = false;
    const json& bj = need(recipe, "basis");
    if (bj.is_string() && bj.get<std::string>() == "self_dual") {
        self_dual_requested = true;
        auto found = find_self_dual_basis(tower);
        if (!found) bad_recipe("no self-dual basis exists for this (q, m)");
        basis = *found;
    } else if (bj.is_array()) {
        for (const auto& e : bj) basis.push_back(tower.top->from_coeffs(e.get<std::vector<std::uint64_t>>()));
    } else {
        bad_recipe("\"basis\" must be \"self_dual\" or an array of coefficient vectors");
    }

    auto spec = make_gabidulin_spec(std::move(tower), std::move(basis), k);
    json norm;
    norm["kind"] = "gabidulin";
    norm["base"] = field_to_json(*base);
    norm["ext"] = ext;
    norm["k"] = k;
    if (self_dual_requested) {
        norm["basis"] = "self_dual";
    } else {
        json b = json::array();
        for (rep_t g : spec.basis) b.push_back(spec.tower.top->coeffs(g));
        norm["basis"] = std::move(b);
    }
    BuiltCode out{gabidulin_code(spec), std::move(norm), {}};
    out.notes.push_back(spec.self_dual ? "basis trace Gram = identity" : "basis is not self-dual");
    return out;
}

BuiltCode build_matrix_product(const json& recipe, const BuildOptions& opt) {
    const json& cj = need(recipe, "constituents");
    if (!cj.is_array() || cj.empty()) bad_recipe("\"constituents\" must be a non-empty array");
    std::vector<BuiltCode> parts;
    for (const auto& sub : cj) parts.push_back(build_from_recipe(sub, opt));

    const FieldPtr f = parts[0].code.field();
    Matrix a = matrix_from_recipe_block(f, need(recipe, "A"));

    std::vector<LinearCode> codes;
    for (auto& p : parts) codes.push_back(p.code);
    auto spec = make_matrix_product_spec(std::move(a), std::move(codes), opt.s);
    auto built = matrix_product_code(spec, opt.distance_budget);

    json norm;
    norm["kind"] = "matrix_product";
    json aj;
    aj["rows"] = spec.A.rows();
    aj["cols"] = spec.A.cols();
    json entries = json::array();
    for (std::size_t r = 0; r < spec.A.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < spec.A.cols(); ++c) row.push_back(f->coeffs(spec.A.get(r, c)));
        entries.push_back(std::move(row));
    }
    aj["entries"] = std::move(entries);
    norm["A"] = std::move(aj);
    json consts = json::array();
    for (auto& p : parts) consts.push_back(p.recipe);
    norm["constituents"] = std::move(consts);

    BuiltCode out{built.code, std::move(norm), {}};
    out.notes.push_back("distance_bound=" + std::to_string(built.distance_bound));
    out.notes.push_back(spec.gram_is_diagonal_invertible ? "gram diagonal invertible"
                                                         : "gram not diagonal (hull factorization unavailable)");
    for (auto& p : parts)
        for (auto& nn : p.notes) out.notes.push_back("constituent: " + nn);
    return out;
}

}  // namespace

BuiltCode build_from_recipe(const json& recipe, const BuildOptions& opt) {
    if (!recipe.is_object()) bad_recipe("recipe must be a JSON object");
    const json& kj = need(recipe, "kind");
    if (!kj.is_string()) bad_recipe("\"kind\" must be a string");
    const std::string kind = kj.get<std::string>();
    if (kind == "explicit") return build_explicit(recipe);
    if (kind == "cyclic") return build_root_set(recipe, opt, false);
    if (kind == "negacyclic") return build_root_set(recipe, opt, true);
    if (kind == "gabidulin") return build_gabidulin(recipe);
    if (kind == "matrix_product") return build_matrix_product(recipe, opt);
    bad_recipe("unknown kind \"" + kind + "\"");
}

}  // namespace ghull
