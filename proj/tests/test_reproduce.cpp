#include <doctest.h>

#include "ghull/reproduce.hpp"

using namespace ghull;

namespace {

ReproduceOptions default_opts() {
    ReproduceOptions o;
    o.seed = 42;
    return o;
}

std::size_t count_status(const json& report, const char* status) {
    std::size_t n = 0;
    for (const auto& row : report["rows"])
        if (row.contains("status") && row["status"] == status) ++n;
    return n;
}

}  // namespace

TEST_CASE("table 1: every printed row matches its own formula arithmetic") {
    auto rep = reproduce_table(1, default_opts());
    CHECK(rep["rows"].size() == 24);
    CHECK(count_status(rep, "reproduced") == 24);
    CHECK(count_status(rep, "discrepancy") == 0);
    CHECK(rep["caption_check"]["match"] == false);  // caption q value cannot yield the printed lengths
    CHECK(rep["summary"]["reproduced"] == 24);
}

TEST_CASE("table 2: the two inconsistent rows are flagged, the rest match") {
    auto rep = reproduce_table(2, default_opts());
    CHECK(rep["rows"].size() == 30);
    CHECK(count_status(rep, "reproduced") == 28);
    CHECK(count_status(rep, "discrepancy") == 2);

    bool found_1368 = false, found_183_46 = false;
    for (const auto& row : rep["rows"]) {
        if (row["status"] != "discrepancy") continue;
        const auto& printed = row["paper_printed"];
        if (printed["d"] == 1368) {
            found_1368 = true;
            CHECK(row["formula"]["d"] == 138);
        }
        if (printed["n"] == 183 && row["inputs"]["k"] == 46) {
            found_183_46 = true;
            CHECK(row["formula"]["d"] == 138);
            CHECK(printed["d"] == 137);
        }
    }
    CHECK(found_1368);
    CHECK(found_183_46);
}

TEST_CASE("table 3: the c = 183 typo is flagged, lengths annotated") {
    auto rep = reproduce_table(3, default_opts());
    CHECK(rep["rows"].size() == 20);
    CHECK(count_status(rep, "discrepancy") == 1);

    const auto& bad = *std::find_if(rep["rows"].begin(), rep["rows"].end(),
                                    [](const json& r) { return r["status"] == "discrepancy"; });
    CHECK(bad["paper_printed"]["c"] == 183);
    CHECK(bad["formula"]["c"] == 193);

    CHECK(rep["caption_check"]["match"]["7^6"] == true);
    CHECK(rep["caption_check"]["match"]["13^4"] == false);
    CHECK(rep["caption_check"]["formula_n"]["13^4"] == 676);
}

TEST_CASE("table 4: desk-scale pipeline") {
    auto rep = reproduce_table(4, default_opts());
    CHECK(rep["rows"].size() == 6);
    // every negacyclic defining set fails q-closure as printed
    for (const auto& row : rep["rows"]) {
        CHECK(row["negacyclic"]["status"] == "not_constructible");
        CHECK(row["status"] == "not_constructible");
    }
    CHECK(rep["summary"]["not_constructible"] == 6);

    // the q = 9 row: cyclic [8,4] built, d = 5 exact by enumerating 6561
    // messages, and the substitute pipeline runs end to end
    const auto& row9 = rep["rows"][0];
    CHECK(row9["q"] == 9);
    CHECK(row9["cyclic"]["status"] == "constructed");
    CHECK(row9["cyclic"]["k"] == 4);
    CHECK(row9["cyclic"]["distance"]["value"] == 5);
    CHECK(row9["cyclic"]["distance"]["exactness"] == "exact");
    CHECK(row9["cyclic"]["distance"]["work_budget_used"] == 6561);

    REQUIRE(row9.contains("substitute"));
    const auto& sub = row9["substitute"];
    CHECK(sub["negacyclic"]["k"] == 4);
    CHECK(sub["negacyclic"]["distance"]["value"] == 3);
    for (const auto& sj : sub["pipeline"]) {
        CHECK(sj["gram_diagonal_invertible"] == true);
        CHECK(sj["mp_code"]["n"] == 16);
        CHECK(sj["mp_code"]["k"] == 8);
        CHECK(sj["distance_bound"] == 3);
        CHECK(sj["bound_check"] == "pass");
        CHECK(sj["hull_factorization_matches"] == true);
        CHECK(sj["eaqec"]["me"] == true);
    }

    // the q = 13 row prints subscript 25
    const auto& row13 = rep["rows"][1];
    bool noted = false;
    for (const auto& n : row13["notes"])
        if (n.get<std::string>().find("subscript") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("table 5: consistent rows reproduce, printed typos flagged") {
    auto rep = reproduce_table(5, default_opts());
    // 3 + 3 + 5 + 97 + 3 + 26 + 13 expanded rows
    CHECK(rep["rows"].size() == 150);

    std::size_t reproduced = 0;
    for (const auto& row : rep["rows"]) {
        if (row["status"] == "reproduced") {
            ++reproduced;
            CHECK(row["hypothesis_violation"].is_null());
        }
    }
    // the 11^5 row (k = 2..4) and the 3^67 zero-dimension row (k = 2..27)
    CHECK(reproduced == 29);

    // the 11^5 anchor: [[10, 2k-2, >= 6-k; 12-2k]]
    for (const auto& row : rep["rows"]) {
        if (row["q"] != "11^5") continue;
        CHECK(row["status"] == "reproduced");
        const std::uint64_t k = row["k1"].get<std::uint64_t>();
        CHECK(row["formula"]["n"] == 10);
        CHECK(row["formula"]["k"] == 2 * k - 2);
        CHECK(row["formula"]["d"] == 6 - k);
        CHECK(row["formula"]["c"] == 12 - 2 * k);
    }

    // rows over 13^6 and 17^8 violate the odd-m hypothesis and disagree in c
    for (const auto& row : rep["rows"]) {
        if (row["q"] == "13^6" || row["q"] == "17^8") {
            CHECK(row["status"] == "discrepancy");
            CHECK(!row["hypothesis_violation"].is_null());
        }
    }
}

TEST_CASE("reproduction reports are byte-identical across runs") {
    for (int table : {1, 2, 3, 5}) {
        auto a = reproduce_table(table, default_opts()).dump(2);
        auto b = reproduce_table(table, default_opts()).dump(2);
        CHECK(a == b);
    }
}
