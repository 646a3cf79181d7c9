#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks of the installed command surface: exit codes and output
// shapes. Skipped when GHULL_BIN is not exported (e.g. running the test
// binary by hand outside ctest).

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    const char* bin = std::getenv("GHULL_BIN");
    REQUIRE(bin != nullptr);
    FILE* pipe = ::popen((std::string(bin) + " " + args + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool cli_available() { return std::getenv("GHULL_BIN") != nullptr; }

const char* kRepetitionRecipe = R"({"kind":"explicit","field":{"p":3,"m":1},
    "generator":{"rows":1,"cols":5,"entries_int":[[1,1,1,1,1]]}})";

std::string write_recipe(const char* text, const char* name) {
    const std::string path = std::string("/tmp/ghull-cli-") + name + ".json";
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("cli exit codes: 0 ok, 1 verification failure, 2 input error") {
    if (!cli_available()) return;

    const std::string recipe = write_recipe(kRepetitionRecipe, "rep5");
    CHECK(run("build " + recipe).exit_code == 0);
    CHECK(run("build /nonexistent-recipe.json").exit_code == 2);

    const std::string bad = write_recipe(R"({"kind":"wat"})", "bad");
    CHECK(run("build " + bad).exit_code == 2);

    CHECK(run("verify decomposition --cases 50").exit_code == 0);
    CHECK(run("verify no_such_suite").exit_code == 2);
}

TEST_CASE("cli pipeline output shapes") {
    if (!cli_available()) return;

    const std::string recipe = write_recipe(kRepetitionRecipe, "rep5b");
    auto built = run("build " + recipe);
    CHECK(built.out == "[5,1]_3\n");

    auto eaqec = run("eaqec " + recipe + " -s 0");
    CHECK(eaqec.out.find("[[5, 1, 5; 4]]_3") != std::string::npos);
    CHECK(eaqec.out.find("me=true") != std::string::npos);

    auto csv = run("--format csv eaqec " + recipe + " -s 0");
    CHECK(csv.out.find("q,n,k,d,d_lb,c,me,family,discrepancy") != std::string::npos);
    CHECK(csv.out.find("3,5,1,5,false,4,true,pipeline,") != std::string::npos);
}

TEST_CASE("cli catalog round trip with dedupe") {
    if (!cli_available()) return;

    const std::string catalog = "/tmp/ghull-cli-catalog.jsonl";
    std::remove(catalog.c_str());
    const std::string recipe = write_recipe(kRepetitionRecipe, "rep5c");

    CHECK(run("--catalog " + catalog + " eaqec " + recipe + " -s 0 --save").exit_code == 0);
    CHECK(run("--catalog " + catalog + " eaqec " + recipe + " -s 0 --save").exit_code == 0);

    auto q = run("--catalog " + catalog + " --format json catalog --me 1");
    // saved twice, stored once
    CHECK(q.out.find("\"id\"") != std::string::npos);
    CHECK(q.out.find('\n') == q.out.rfind('\n'));

    auto none = run("--catalog " + catalog + " catalog --n-min 100");
    CHECK(none.exit_code == 0);
    CHECK(none.out.empty());
    std::remove(catalog.c_str());
}
