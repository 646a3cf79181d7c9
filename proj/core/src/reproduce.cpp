#include "ghull/reproduce.hpp"

#include <numeric>

#include "ghull/version.hpp"

namespace ghull {

namespace {

// ------------------------------------------------------------ fixtures, 1-3

// One printed row of the ME tables: the (n, k, h) input columns plus the
// printed 4-tuple, exactly as published.
struct MeRowFixture {
    std::uint64_t N, k, h;       // input columns (N is the row's code length)
    std::uint64_t pn, pk, pd, pc;  // printed [[pn, pk, >= pd; pc]]
};

const MeRowFixture kTable1[] = {
    {312, 14, 1, 312, 13, 299, 299}, {312, 15, 1, 312, 14, 298, 298}, {312, 52, 1, 312, 51, 261, 261},
    {312, 53, 1, 312, 52, 260, 260}, {313, 14, 1, 313, 13, 300, 300}, {313, 15, 1, 313, 14, 299, 299},
    {313, 52, 1, 313, 51, 262, 262}, {313, 53, 1, 313, 52, 261, 261}, {314, 14, 1, 314, 13, 301, 301},
    {314, 15, 1, 314, 14, 300, 300}, {314, 52, 1, 314, 51, 263, 263}, {314, 53, 1, 314, 52, 262, 262},
    {468, 20, 1, 468, 19, 449, 449}, {468, 21, 1, 468, 20, 448, 448}, {468, 78, 1, 468, 77, 391, 391},
    {468, 79, 1, 468, 78, 390, 390}, {469, 20, 1, 469, 19, 450, 450}, {469, 21, 1, 469, 20, 449, 449},
    {469, 78, 1, 469, 77, 392, 392}, {469, 79, 1, 469, 78, 391, 391}, {470, 20, 1, 470, 19, 451, 451},
    {470, 21, 1, 470, 20, 450, 450}, {470, 78, 1, 470, 77, 393, 393}, {470, 79, 1, 470, 78, 392, 392},
};

const MeRowFixture kTable2[] = {
    {91, 6, 1, 91, 5, 86, 86},       {91, 7, 1, 91, 6, 85, 85},       {91, 8, 1, 91, 7, 84, 84},
    {91, 23, 1, 91, 22, 69, 69},     {91, 24, 1, 91, 23, 68, 68},     {92, 6, 1, 92, 5, 87, 87},
    {92, 7, 1, 92, 6, 86, 86},       {92, 8, 1, 92, 7, 85, 85},       {92, 23, 1, 92, 22, 70, 70},
    {92, 24, 1, 92, 23, 69, 69},     {93, 6, 1, 93, 5, 88, 88},       {93, 7, 1, 93, 6, 87, 87},
    {93, 8, 1, 93, 7, 86, 86},       {93, 23, 1, 93, 22, 71, 71},     {93, 24, 1, 93, 23, 70, 70},
    {182, 9, 1, 182, 8, 174, 174},   {182, 10, 1, 182, 9, 173, 173},  {182, 11, 1, 182, 10, 172, 172},
    {182, 46, 1, 182, 45, 137, 137}, {182, 47, 1, 182, 46, 136, 136}, {183, 9, 1, 183, 8, 175, 175},
    {183, 10, 1, 183, 9, 174, 174},  {183, 11, 1, 183, 10, 173, 173}, {183, 46, 1, 183, 45, 137, 137},
    {183, 47, 1, 183, 46, 137, 137}, {184, 9, 1, 184, 8, 176, 176},   {184, 10, 1, 184, 9, 175, 175},
    {184, 11, 1, 184, 10, 174, 174}, {184, 46, 1, 184, 45, 139, 139}, {184, 47, 1, 184, 46, 1368, 138},
};

const MeRowFixture kTable3a[] = {
    {196, 4, 1, 196, 3, 193, 183},   {196, 5, 1, 196, 4, 192, 192},   {196, 6, 1, 196, 5, 191, 191},
    {196, 25, 1, 196, 24, 172, 172}, {196, 26, 1, 196, 25, 171, 171}, {197, 4, 1, 197, 3, 194, 194},
    {197, 5, 1, 197, 4, 193, 193},   {197, 6, 1, 197, 5, 192, 192},   {197, 25, 1, 197, 24, 173, 173},
    {197, 26, 1, 197, 25, 172, 172},
};

const MeRowFixture kTable3b[] = {
    {383, 4, 1, 383, 3, 380, 380},   {383, 5, 1, 383, 4, 379, 379},   {383, 6, 1, 383, 5, 378, 378},
    {383, 25, 1, 383, 24, 359, 359}, {383, 26, 1, 383, 25, 358, 358}, {384, 4, 1, 384, 3, 381, 381},
    {384, 5, 1, 384, 4, 380, 380},   {384, 6, 1, 384, 5, 379, 379},   {384, 25, 1, 384, 24, 360, 360},
    {384, 26, 1, 384, 25, 359, 359},
};

json me_fixture_rows(const QLabel& q, const MeRowFixture* rows, std::size_t count, std::size_t* reproduced,
                     std::size_t* discrepant) {
    json out = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        const auto& fx = rows[i];
        const EaqecParams formula = me_family_row(q, fx.N, fx.k, fx.h);

        std::string diff;
        auto cmp = [&](const char* name, std::uint64_t got, std::uint64_t printed) {
            if (got != printed) {
                if (!diff.empty()) diff += "; ";
                diff += std::string(name) + ": formula " + std::to_string(got) + " vs printed " +
                        std::to_string(printed);
            }
        };
        cmp("n", formula.n, fx.pn);
        cmp("k", formula.k, fx.pk);
        cmp("d", formula.d, fx.pd);
        cmp("c", formula.c, fx.pc);

        json row;
        row["inputs"] = json{{"n", fx.N}, {"k", fx.k}, {"h", fx.h}};
        row["paper_printed"] = json{{"n", fx.pn}, {"k", fx.pk}, {"d", fx.pd}, {"c", fx.pc}};
        row["formula"] = json{{"n", formula.n}, {"k", formula.k}, {"d", formula.d}, {"c", formula.c},
                              {"me", classify_me(formula)}};
        row["status"] = diff.empty() ? "reproduced" : "discrepancy";
        row["discrepancy"] = diff.empty() ? json(nullptr) : json(diff);
        (diff.empty() ? *reproduced : *discrepant) += 1;
        out.push_back(std::move(row));
    }
    return out;
}

// --------------------------------------------------------------- fixtures, 5

// Printed symbolic rows; every printed quantity is affine in k.
struct Affine {
    std::int64_t coef, off;
    std::uint64_t at(std::uint64_t k) const { return static_cast<std::uint64_t>(coef * static_cast<std::int64_t>(k) + off); }
};

struct T5Fixture {
    std::uint64_t q_base;
    unsigned m, s;
    CharCase cc;
    std::uint64_t kmin, kmax;
    std::uint64_t n;
    Affine a_pr, klog_pr, d_pr, c_pr;
    const char* label;
};

const T5Fixture kTable5[] = {
    {11, 5, 1, CharCase::odd, 2, 4, 10, {0, 2}, {2, -2}, {-1, 6}, {-2, 12}, "11^5"},
    {13, 6, 2, CharCase::odd, 2, 4, 12, {0, 4}, {2, -4}, {-1, 7}, {-2, 14}, "13^6"},
    {17, 8, 2, CharCase::odd, 2, 6, 16, {0, 2}, {2, -4}, {-1, 9}, {-2, 18}, "17^8"},
    {2, 100, 2, CharCase::even, 2, 98, 200, {0, 2}, {2, -4}, {-1, 101}, {-2, 202}, "2^100"},
    {2, 100, 2, CharCase::even, 98, 100, 200, {-1, 200}, {3, -200}, {-1, 101}, {-4, 400}, "2^100"},
    {3, 67, 40, CharCase::odd, 2, 27, 134, {2, 0}, {0, 0}, {-1, 68}, {0, 134}, "3^67"},
    {3, 67, 40, CharCase::odd, 27, 39, 134, {-2, 200}, {2, -54}, {-1, 68}, {-2, 184}, "3^67"},
};

// --------------------------------------------------------------- fixtures, 4

struct T4Fixture {
    std::uint64_t p;
    unsigned m;
    std::uint64_t q, n;
    std::uint64_t cyc_lo, cyc_hi;    // cyclic set {cyc_lo..cyc_hi}
    std::uint64_t nega_count;        // negacyclic set {1+2i : 0 <= i < nega_count}
    std::uint64_t pn, pk, pd, pc;    // printed [[pn, pk, >= pd; pc]]
    const char* printed_q_label;
};

const T4Fixture kTable4[] = {
    {3, 2, 9, 8, 2, 5, 4, 16, 3, 5, 13, "9"},
    {13, 1, 13, 12, 3, 7, 6, 24, 5, 7, 19, "25"},
    {5, 2, 25, 24, 6, 18, 12, 48, 11, 13, 37, "25"},
    {29, 1, 29, 28, 7, 20, 14, 56, 13, 15, 43, "29"},
    {7, 2, 49, 48, 12, 24, 24, 96, 23, 25, 73, "49"},
    {13, 2, 169, 168, 42, 127, 84, 336, 83, 85, 243, "169"},
};

json root_code_report(const RootSetCode& rc, std::uint64_t budget) {
    json j;
    j["status"] = "constructed";
    j["n"] = rc.code.length();
    j["k"] = rc.code.dim();
    j["bch_lower_bound"] = rc.bch_lower_bound;
    j["distance"] = distance_to_json(rc.code.min_distance(budget));
    j["splitting_field"] = field_to_json(*rc.splitting_field);
    j["root_order"] = rc.root_order;
    return j;
}

json table4_substitute(const FieldPtr& f9, const RootSetCode& c1, const T4Fixture& fx, const ReproduceOptions& opt) {
    // valid stand-in for the non-closed printed set: the q-closed {1,3,9,11}
    const RootSetCode c2 = negacyclic_code(f9, 8, {1, 3, 9, 11}, RootSetOptions{true, std::nullopt});

    json j;
    j["note"] = "printed negacyclic set replaced by the q-closed {1,3,9,11}";
    j["negacyclic"] = root_code_report(c2, opt.distance_budget);

    const Matrix a = Matrix::from_rows(f9, {{1, 1}, {1, f9->from_int(-1)}});
    json per_s = json::array();
    for (unsigned s = 0; s < f9->m(); ++s) {
        auto spec = make_matrix_product_spec(a, {c1.code, c2.code}, s);
        auto built = matrix_product_code(spec, opt.distance_budget);

        json sj;
        sj["s"] = s;
        sj["gram_diagonal_invertible"] = spec.gram_is_diagonal_invertible;
        sj["mp_code"] = json{{"n", built.code.length()}, {"k", built.code.dim()}};
        sj["distance_bound"] = built.distance_bound;

        const auto d = built.code.min_distance(opt.distance_budget);
        sj["distance"] = distance_to_json(d);
        sj["bound_satisfied"] = d.value >= built.distance_bound || !d.exact();
        if (d.exact()) sj["bound_check"] = d.value >= built.distance_bound ? "pass" : "fail";
        else sj["bound_check"] = "skipped (distance not exact within budget)";

        const LinearCode formula_hull = matrix_product_hull(spec);
        const LinearCode direct_hull = built.code.hull(s);
        sj["hull_dim"] = direct_hull.dim();
        sj["hull_factorization_matches"] = formula_hull == direct_hull;

        const auto params = eaqec_from_hull_decomposition(built.code, s, d, opt.distance_budget);
        sj["eaqec"] = eaqec_to_json(params);
        // the printed s is unstated; record whether this s lands on the
        // printed (n, k, c)
        sj["matches_printed"] = params.n == fx.pn && params.k == fx.pk && params.c == fx.pc;
        per_s.push_back(std::move(sj));
    }
    j["pipeline"] = std::move(per_s);
    return j;
}

json reproduce_table4(const ReproduceOptions& opt, json& summary) {
    json rows = json::array();
    std::size_t reproduced = 0, discrepant = 0, not_constructible = 0;

    for (const auto& fx : kTable4) {
        json row;
        row["q"] = fx.q;
        row["n"] = fx.n;
        row["paper_printed"] = json{{"n", fx.pn}, {"k", fx.pk}, {"d", fx.pd}, {"c", fx.pc},
                                    {"q_label", fx.printed_q_label}};

        std::vector<std::string> notes;
        if (std::to_string(fx.q) != fx.printed_q_label)
            notes.push_back("printed field subscript " + std::string(fx.printed_q_label) +
                            " conflicts with q = " + std::to_string(fx.q));

        const FieldPtr f = FiniteField::create(fx.p, fx.m);

        // cyclic constituent
        std::vector<std::uint64_t> cyc;
        for (std::uint64_t e = fx.cyc_lo; e <= fx.cyc_hi; ++e) cyc.push_back(e);
        std::optional<RootSetCode> c1;
        try {
            c1 = cyclic_code(f, fx.n, cyc, RootSetOptions{opt.strict_closure, std::nullopt});
            row["cyclic"] = root_code_report(*c1, opt.distance_budget);
        } catch (const Error& e) {
            row["cyclic"] = json{{"status", "not_constructible"}, {"reason", e.what()}};
        }

        // negacyclic constituent, as printed
        std::vector<std::uint64_t> nega;
        for (std::uint64_t i = 0; i < fx.nega_count; ++i) nega.push_back(1 + 2 * i);
        bool nega_ok = false;
        try {
            const RootSetCode c2 = negacyclic_code(f, fx.n, nega, RootSetOptions{opt.strict_closure, std::nullopt});
            row["negacyclic"] = root_code_report(c2, opt.distance_budget);
            nega_ok = true;
        } catch (const Error& e) {
            row["negacyclic"] = json{{"status", "not_constructible"}, {"reason", e.what()}};
            notes.push_back("printed root alpha has order q-1 = " + std::to_string(fx.q - 1) +
                            " in GF(q); a negacyclic root needs order 2n = " + std::to_string(2 * fx.n));
        }

        if (nega_ok && c1) {
            row["status"] = "reproduced";
            ++reproduced;
        } else {
            row["status"] = "not_constructible";
            row["matrix_product"] = json{{"status", "not_constructible"},
                                         {"reason", "negacyclic constituent unavailable as printed"}};
            ++not_constructible;
        }

        if (fx.q == 9 && c1) row["substitute"] = table4_substitute(f, *c1, fx, opt);

        row["notes"] = notes;
        rows.push_back(std::move(row));
    }

    summary["rows"] = rows.size();
    summary["reproduced"] = reproduced;
    summary["discrepancy"] = discrepant;
    summary["not_constructible"] = not_constructible;
    return rows;
}

}  // namespace

json reproduce_table(int table_id, const ReproduceOptions& opt) {
    json report;
    report["table"] = table_id;
    report["seed"] = opt.seed;
    report["distance_budget"] = opt.distance_budget;
    report["strict_closure"] = opt.strict_closure;
    report["tool_version"] = kToolVersion;

    std::size_t reproduced = 0, discrepant = 0;
    json summary;

    switch (table_id) {
        case 1: {
            report["caption"] = json{{"family", "cor4.1"}, {"q", "3^4"}, {"s", 1}, {"r", json::array({2, 3})}};
            // base lengths the caption parameters actually produce
            json lens = json::array();
            for (std::uint64_t r : {2, 3}) {
                const std::uint64_t q = 81, ps = 3;
                lens.push_back(r * ((q - 1) / (ps - 1)));
            }
            report["caption_check"] =
                json{{"formula_base_lengths", lens},
                     {"printed_base_lengths", json::array({312, 468})},
                     {"match", false},
                     {"note", "n = r(q-1)/(p^s-1) with the caption q = 3^4 yields 80 and 120, not the printed "
                              "lengths; the printed rows are checked on their own (n, k, h) columns"}};
            report["rows"] = me_fixture_rows(QLabel{3, 4}, kTable1, std::size(kTable1), &reproduced, &discrepant);
            break;
        }
        case 2: {
            report["caption"] =
                json{{"family", "cor4.2"}, {"q", "3^6"}, {"s", 1}, {"x1", 364}, {"x2", 24}};
            const std::uint64_t q = 729;
            const std::uint64_t g1 = std::gcd<std::uint64_t>(364, q - 1);
            const std::uint64_t g2 = std::gcd<std::uint64_t>(24, q - 1);
            report["caption_check"] = json{
                {"formula_base_length_unit", (q - 1) / g1},
                {"printed_base_lengths", json::array({91, 182})},
                {"match", false},
                {"note", "n = r(q-1)/gcd(x1, q-1) gives multiples of " + std::to_string((q - 1) / g1) +
                             " for the caption x1 = 364; the printed lengths are multiples of " +
                             std::to_string((q - 1) / g2) +
                             " = (q-1)/gcd(x2, q-1), i.e. they follow from reading x2 in place of x1 (which then "
                             "violates the divisibility precondition ((q-1)/(p^s-1)) | x1)"}};
            report["rows"] = me_fixture_rows(QLabel{3, 6}, kTable2, std::size(kTable2), &reproduced, &discrepant);
            break;
        }
        case 3: {
            report["caption"] = json{{"family", "cor4.3"}, {"q", json::array({"7^6", "13^4"})}, {"s", 1},
                                     {"a", 1},           {"w", 2},
                                     {"t", 4}};
            report["caption_check"] = json{
                {"formula_n", json{{"7^6", 4 * 49}, {"13^4", 4 * 169}}},
                {"printed_n", json{{"7^6", 196}, {"13^4", 383}}},
                {"match", json{{"7^6", true}, {"13^4", false}}},
                {"note", "n = t*p^(a*w) reproduces 196 for p = 7 but gives 676, not 383, for p = 13"}};
            json rows = me_fixture_rows(QLabel{7, 6}, kTable3a, std::size(kTable3a), &reproduced, &discrepant);
            for (auto& r : me_fixture_rows(QLabel{13, 4}, kTable3b, std::size(kTable3b), &reproduced, &discrepant))
                rows.push_back(std::move(r));
            report["rows"] = std::move(rows);
            break;
        }
        case 4: {
            report["caption"] = json{{"construction", "cor5.1 matrix product of cyclic and negacyclic codes"},
                                     {"A", json::array({json::array({1, 1}), json::array({1, -1})})}};
            report["rows"] = reproduce_table4(opt, summary);
            break;
        }
        case 5: {
            report["caption"] = json{{"families", json::array({"thm5.2", "thm5.3"})}};
            json rows = json::array();
            for (const auto& fx : kTable5) {
                std::string hypothesis;
                try {
                    family_thm52_53(fx.q_base, fx.m, static_cast<unsigned>(fx.kmin), static_cast<unsigned>(fx.kmin),
                                    fx.s, fx.cc);
                } catch (const Error& e) {
                    if (e.code() == Errc::PreconditionViolated) hypothesis = e.what();
                }
                for (std::uint64_t k = fx.kmin; k <= fx.kmax; ++k) {
                    const auto arith =
                        thm52_53_arithmetic(fx.m, static_cast<unsigned>(k), static_cast<unsigned>(k), fx.s, fx.cc);
                    std::string diff;
                    auto cmp = [&](const char* name, std::uint64_t got, std::uint64_t printed) {
                        if (got != printed) {
                            if (!diff.empty()) diff += "; ";
                            diff += std::string(name) + ": formula " + std::to_string(got) + " vs printed " +
                                    std::to_string(printed);
                        }
                    };
                    cmp("a", arith.a, fx.a_pr.at(k));
                    cmp("k", arith.klog, fx.klog_pr.at(k));
                    cmp("d", arith.d, fx.d_pr.at(k));
                    cmp("c", arith.c, fx.c_pr.at(k));

                    json row;
                    row["q"] = fx.label;
                    row["s"] = fx.s;
                    row["case"] = fx.cc == CharCase::odd ? "odd" : "even";
                    row["k1"] = k;
                    row["k2"] = k;
                    row["paper_printed"] = json{{"a", fx.a_pr.at(k)},
                                                {"n", fx.n},
                                                {"k", fx.klog_pr.at(k)},
                                                {"d", fx.d_pr.at(k)},
                                                {"c", fx.c_pr.at(k)}};
                    row["formula"] = json{{"a", arith.a},     {"n", arith.n}, {"k", arith.klog},
                                          {"d", arith.d},     {"c", arith.c}, {"branch", arith.branch}};
                    row["hypothesis_violation"] = hypothesis.empty() ? json(nullptr) : json(hypothesis);
                    const bool ok = diff.empty() && hypothesis.empty();
                    row["status"] = ok ? "reproduced" : "discrepancy";
                    row["discrepancy"] = diff.empty() ? json(nullptr) : json(diff);
                    (ok ? reproduced : discrepant) += 1;
                    rows.push_back(std::move(row));
                }
            }
            report["rows"] = std::move(rows);
            break;
        }
        default:
            raise(Errc::RecipeInvalid, "table id must be 1..5");
    }

    if (table_id != 4) {
        summary["rows"] = report["rows"].size();
        summary["reproduced"] = reproduced;
        summary["discrepancy"] = discrepant;
    }
    report["summary"] = std::move(summary);
    return report;
}

}  // namespace ghull
