#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end checks against the installed binary: exit codes, the
// stdout-data / stderr-diagnostics split, and JSON output parity with the
// in-process pipeline.

#include "picmod/pipeline.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    auto out = dir / ("picmod_out_" + std::to_string(counter) + ".txt");
    auto err = dir / ("picmod_err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(PICMOD_BIN) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

} // namespace

TEST_CASE("cover: success, data on stdout only") {
    RunResult r = run_cli("cover --spec \"d=2; e=1,1,1,1,1,1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("H_2") != std::string::npos);
    CHECK(r.out.find("Z/10") != std::string::npos);
    CHECK(r.out.find("both-agree") != std::string::npos);
}

TEST_CASE("cover: JSON output matches the in-process pipeline") {
    RunResult r = run_cli("cover --spec \"d=2; e=1,1,1,1,1,1,1,1\" --json");
    REQUIRE(r.exit_code == 0);
    picmod::PicardReport parsed = picmod::report_from_json(nlohmann::json::parse(r.out));
    CHECK(parsed == picmod::run_cover("d=2; e=1,1,1,1,1,1,1,1"));
}

TEST_CASE("cover: exit 3 with diagnostics on stderr for a non-admissible spec") {
    RunResult r = run_cli("cover --spec \"d=4; e=1,2,3\"");
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.find("not numerically admissible") != std::string::npos);
    CHECK(r.err.find("condition 1 fails") != std::string::npos);
}

TEST_CASE("cover: exit 3 below the mapping-class-group regime") {
    RunResult r = run_cli("cover --spec \"d=2; e=1,1,1\"");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("outside the g >= 2 regime") != std::string::npos);
}

TEST_CASE("cover: exit 2 on parse errors") {
    CHECK(run_cli("cover --spec \"nonsense\"").exit_code == 2);
    CHECK(run_cli("cover --spec \"d=4; e=2,2\"").exit_code == 2); // reducible curve
    CHECK(run_cli("cover").exit_code == 2);                       // missing --spec
}

TEST_CASE("oracle: values and exit codes") {
    RunResult r = run_cli("oracle pic-hyp-compact 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Z x Z/4") != std::string::npos);

    CHECK(run_cli("oracle no-such-name 1").exit_code == 2);
    CHECK(run_cli("oracle pic-hyp").exit_code == 2);
    CHECK(run_cli("oracle pic-hyp 1").exit_code == 3);

    RunResult big = run_cli("oracle sp2-order 12 --json");
    REQUIRE(big.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(big.out);
    CHECK(picmod::report_from_json(j) == picmod::run_oracle("sp2-order", {"12"}));
}

TEST_CASE("sweep: table rows and range errors") {
    RunResult r = run_cli("sweep hyperelliptic --g 2..5");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].find("Z/10") != std::string::npos);
    CHECK(rows[3].find("Z/44") != std::string::npos);

    CHECK(run_cli("sweep hyperelliptic --g 5..2").exit_code == 2);
    CHECK(run_cli("sweep hyperelliptic").exit_code == 2);
    CHECK(run_cli("sweep unknown-target --g 2..3").exit_code == 2);
    CHECK(run_cli("sweep hyperelliptic --g 1..3").exit_code == 3);

    RunResult js = run_cli("sweep admissible --n 3..6 --d 2 --json");
    REQUIRE(js.exit_code == 0);
    nlohmann::json arr = nlohmann::json::parse(js.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 4);
    CHECK(picmod::report_from_json(arr[2]).group->order() == 4);
}
