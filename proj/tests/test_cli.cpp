#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = RIESZPROB_CLI_PATH;
const std::string kFixtures = RIESZPROB_FIXTURES_DIR;

struct Result {
    int exit_code;
    std::string output;
};

Result run(const std::string& args) {
    std::string command = kCli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("validate: valid spec echoes normalized weights") {
    Result r = run("validate " + kFixtures + "/example.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1/4") != std::string::npos);
}

TEST_CASE("validate: weight sum violation names the sum") {
    Result r = run("validate " + kFixtures + "/bad_sum.json");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("9/8") != std::string::npos);
}

TEST_CASE("validate: malformed JSON is a parse error") {
    Result r = run("validate " + kFixtures + "/malformed.json");
    CHECK(r.exit_code == 2);
}

TEST_CASE("check ltp on the classical example passes") {
    Result r = run("check ltp --space " + kFixtures + "/example.json --partition halves --event D --f e");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pass") != std::string::npos);
}

TEST_CASE("check condprob proviso failure exits with the skip code") {
    // B2 = A misses block {3,4} of T entirely, so T P_{B2}(e) has zero
    // coordinates there.
    Result r = run("check condprob --space " + kFixtures +
                   "/example.json --t-partition halves --event A --event A --f e");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("precondition-skipped") != std::string::npos);
}

TEST_CASE("check inclusion-exclusion lists signed terms") {
    Result r = run("check inclusion-exclusion --space " + kFixtures +
                   "/example.json --event A --event B");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("+{1, 2}") != std::string::npos);
    CHECK(r.output.find("+{2, 3}") != std::string::npos);
    CHECK(r.output.find("-{2}") != std::string::npos);
}

TEST_CASE("check bayes and correspondence pass on the example space") {
    CHECK(run("check bayes --space " + kFixtures +
              "/example.json --partition halves --event D --j 0 --f e")
              .exit_code == 0);
    CHECK(run("check correspondence --space " + kFixtures +
              "/example.json --partition halves --event A --event B")
              .exit_code == 0);
    CHECK(run("check independence --space " + kFixtures + "/example.json --event A --event B")
              .exit_code == 0);
    CHECK(run("check axioms --space " + kFixtures +
              "/example.json --t-partition halves --seed 3 --samples 50")
              .exit_code == 0);
}

TEST_CASE("unknown event name is an invariant violation") {
    Result r = run("check ltp --space " + kFixtures +
                   "/example.json --partition halves --event nope --f e");
    CHECK(r.exit_code == 3);
}

TEST_CASE("fuzz is deterministic and writes byte-identical reports") {
    auto tmp = std::filesystem::temp_directory_path();
    auto out1 = tmp / "rieszprob_fuzz_1.json";
    auto out2 = tmp / "rieszprob_fuzz_2.json";
    CHECK(run("fuzz --seed 42 --trials 50 --out " + out1.string()).exit_code == 0);
    CHECK(run("fuzz --seed 42 --trials 50 --out " + out2.string()).exit_code == 0);
    std::string a = slurp(out1);
    std::string b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}

TEST_CASE("fuzz with zero trials exits cleanly") {
    Result r = run("fuzz --seed 1 --trials 0");
    CHECK(r.exit_code == 0);
}
