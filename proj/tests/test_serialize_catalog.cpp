#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ghull/catalog.hpp"
#include "ghull/verify.hpp"
#include "ghull/version.hpp"

using namespace ghull;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name) {
        path = std::filesystem::temp_directory_path() / (std::string("ghull-test-") + name + "-" +
                                                          std::to_string(::getpid()) + ".jsonl");
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("field and matrix json round trips") {
    const auto f9 = FiniteField::create(3, 2);
    auto j = field_to_json(*f9);
    CHECK(j["p"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["modulus"] == json::array({1, 0, 1}));
    auto f2 = field_from_json(j);
    CHECK(f2->same(*f9));

    Rng rng(5);
    Matrix m(f9, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t jj = 0; jj < 3; ++jj) m.set(i, jj, rng.below(9));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    auto code = random_code(rng, f9, 4, 2);
    CHECK(code_from_json(code_to_json(code)) == code);
}

TEST_CASE("recipes build and normalize") {
    json rep = json::parse(R"({"kind":"explicit","field":{"p":3,"m":1},
        "generator":{"rows":1,"cols":5,"entries_int":[[1,1,1,1,1]]}})");
    auto built = build_from_recipe(rep, BuildOptions{});
    CHECK(built.code.length() == 5);
    CHECK(built.code.dim() == 1);

    // normalized recipe re-ingests to the identical record id
    auto rebuilt = build_from_recipe(built.recipe, BuildOptions{});
    CHECK(rebuilt.code == built.code);
    CHECK(catalog_record_id(rebuilt.recipe, 0) == catalog_record_id(built.recipe, 0));

    json cyc = json::parse(R"({"kind":"cyclic","field":{"p":3,"m":2},"n":8,"exponents":[2,3,4,5]})");
    auto c = build_from_recipe(cyc, BuildOptions{});
    CHECK(c.code.length() == 8);
    CHECK(c.code.dim() == 4);

    json gab = json::parse(R"({"kind":"gabidulin","base":{"p":3,"m":1},"ext":3,"k":2,"basis":"self_dual"})");
    auto g = build_from_recipe(gab, BuildOptions{});
    CHECK(g.code.length() == 3);
    CHECK(g.code.dim() == 2);
    CHECK(g.code.field()->q() == 27);

    json mp = json::parse(R"({"kind":"matrix_product",
        "A":{"rows":2,"cols":2,"entries_int":[[1,1],[1,-1]]},
        "constituents":[
          {"kind":"cyclic","field":{"p":3,"m":2},"n":8,"exponents":[2,3,4,5]},
          {"kind":"negacyclic","field":{"p":3,"m":2},"n":8,"exponents":[1,3,9,11]}]})");
    auto m = build_from_recipe(mp, BuildOptions{});
    CHECK(m.code.length() == 16);
    CHECK(m.code.dim() == 8);
    CHECK(m.code.structural_distance_lb() == 3);  // min{2*5, 3}
}

TEST_CASE("recipe errors carry field-level diagnostics") {
    CHECK_THROWS_WITH_AS(build_from_recipe(json::parse(R"({"kind":"nope"})"), BuildOptions{}),
                         doctest::Contains("unknown kind"), Error);
    CHECK_THROWS_WITH_AS(build_from_recipe(json::parse(R"({"kind":"cyclic","n":8})"), BuildOptions{}),
                         doctest::Contains("field"), Error);
    CHECK_THROWS_WITH_AS(
        build_from_recipe(json::parse(R"({"kind":"explicit","field":{"p":4,"m":1},
            "generator":{"rows":1,"cols":1,"entries_int":[[1]]}})"),
                          BuildOptions{}),
        doctest::Contains("rejected"), Error);
    try {
        build_from_recipe(json::parse(R"({"kind":"cyclic"})"), BuildOptions{});
        FAIL("expected RecipeInvalid");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RecipeInvalid);
    }
}

TEST_CASE("catalog append, dedupe and query") {
    TempFile tmp("catalog");
    Catalog cat(tmp.path);
    CHECK(cat.load().empty());

    json rep = json::parse(R"({"kind":"explicit","field":{"p":3,"m":1},
        "generator":{"rows":1,"cols":5,"entries_int":[[1,1,1,1,1]]}})");
    auto built = build_from_recipe(rep, BuildOptions{});
    auto d = built.code.min_distance(1 << 12);

    CatalogRecord rec;
    rec.recipe = built.recipe;
    rec.s = 0;
    rec.id = catalog_record_id(rec.recipe, 0);
    rec.eaqec = eaqec_from_lcd(built.code, 0, d);
    rec.verification = {{"dims", "pass"}, {"hull_dim", "pass"}, {"lcd_certificate", "pass"}, {"me", "pass"}};
    rec.created_at = "2026-01-01T00:00:00Z";
    rec.tool_version = kToolVersion;

    CHECK(cat.append(rec));
    CHECK(!cat.append(rec));  // dedupe by id
    CHECK(cat.load().size() == 1);

    CatalogRecord rec2 = rec;
    rec2.s = 0;
    rec2.recipe["generator"]["entries"] = nullptr;  // different recipe text
    rec2.id = catalog_record_id(rec2.recipe, 0);
    CHECK(cat.append(rec2));
    CHECK(cat.load().size() == 2);

    CatalogQuery q;
    q.me = true;
    CHECK(cat.query(q).size() == 2);
    q.n_min = 6;
    CHECK(cat.query(q).empty());
    CatalogQuery qq;
    qq.q = QLabel{3, 1};
    CHECK(cat.query(qq).size() == 2);
    qq.q = QLabel{2, 1};
    CHECK(cat.query(qq).empty());
}

TEST_CASE("corrupt catalog lines are reported with their line number") {
    TempFile tmp("corrupt");
    {
        std::ofstream out(tmp.path);
        out << "{\"id\":\"x\"}\n";  // parseable but not a record
    }
    Catalog cat(tmp.path);
    CHECK_THROWS_WITH_AS(cat.load(), doctest::Contains(":1:"), Error);

    {
        std::ofstream out(tmp.path, std::ios::trunc);
        out << "not json\n";
    }
    CHECK_THROWS_WITH_AS(cat.load(), doctest::Contains("unparseable"), Error);
}

TEST_CASE("record ids are deterministic") {
    json r = json::parse(R"({"kind":"cyclic","field":{"p":3,"m":2},"n":8,"exponents":[2,3,4,5]})");
    CHECK(catalog_record_id(r, 0) == catalog_record_id(r, 0));
    CHECK(catalog_record_id(r, 0) != catalog_record_id(r, 1));
}

TEST_CASE("family row serialization formats") {
    auto rows = family_cor41(3, 4, 1, 2, 14, 1);
    auto j = family_row_to_json(rows[0]);
    CHECK(j["family"] == "cor4.1");
    CHECK(j["inputs"]["r"] == 2);
    CHECK(j["n"] == 80);
    CHECK(j["d_lb"] == true);
    CHECK(j["me"] == true);
    CHECK(j["paper_printed"].is_null());
    CHECK(j["discrepancy"].is_null());

    CHECK(family_row_csv_header() == "q,n,k,d,d_lb,c,me,family,discrepancy");
    CHECK(family_row_to_csv(rows[0]) == "3^4,80,13,67,true,67,true,cor4.1,");
}
