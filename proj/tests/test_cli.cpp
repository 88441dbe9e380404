#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "wordparse.hpp"

using namespace nctrace;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"nctrace"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

long count_lines(const std::string& text) {
    long n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("word grammar accepts the documented forms") {
    CHECK(parse_word("u") == TraceWord({{1, Star::plain}}));
    CHECK(parse_word("u*") == TraceWord({{1, Star::star}}));
    CHECK(parse_word("u^2, u^3*, u^2*") ==
          TraceWord({{2, Star::plain}, {3, Star::star}, {2, Star::star}}));
    CHECK(parse_word("  u ,u*  ") == TraceWord({{1, Star::plain}, {1, Star::star}}));
    CHECK(parse_word("u^10") == TraceWord({{10, Star::plain}}));
}

TEST_CASE("word grammar rejects everything else") {
    for (const char* bad : {"", " ", "v", "u^", "u^0", "u^-2", "u**", "u*, ", "u^2x", "2u",
                            "u,,u", "u^2 u^3", "*u"})
        CHECK_THROWS_AS(parse_word(bad), std::invalid_argument);
}

TEST_CASE("nc list streams one partition per line") {
    const CliResult r = run({"nc", "list", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 5);
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        const auto parsed = nlohmann::json::parse(line);
        CHECK(parsed.at("p") == 3);
        CHECK(parsed.at("blocks").is_array());
    }
}

TEST_CASE("nc list pairings and connecting filters") {
    CHECK(count_lines(run({"nc", "list", "--p", "6", "--pairings"}).out) == 5);
    CHECK(count_lines(run({"nc", "list", "--p", "4", "--connecting", "2,2"}).out) == 10);
    // parts must sum to p
    CHECK(run({"nc", "list", "--p", "4", "--connecting", "2,3"}).code == 2);
}

TEST_CASE("nc list budget and usage errors") {
    CHECK(run({"nc", "list", "--p", "100"}).code == 1);
    CHECK(run({"nc", "list", "--p", "0"}).code == 2);
    CHECK(run({"nc", "list"}).code == 2);
    CHECK(run({"nc"}).code == 2);
}

TEST_CASE("nc kreweras matches the hand computation") {
    const CliResult r = run({"nc", "kreweras", "--p", "3", "--blocks", "[[1,2],[3]]"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"p\":3,\"blocks\":[[1],[2,3]]}\n");
    CHECK(run({"nc", "kreweras", "--p", "3", "--blocks", "[[1,2]]"}).code == 2);
    CHECK(run({"nc", "kreweras", "--p", "4", "--blocks", "[[1,3],[2,4]]"}).code == 2);
    CHECK(run({"nc", "kreweras", "--p", "3", "--blocks", "not json"}).code == 2);
    CHECK(run({"nc", "kreweras", "--p", "3", "--blocks", "[[1,2],[3.5]]"}).code == 2);
}

TEST_CASE("cumulant command emits the report") {
    const CliResult r = run({"cumulant", "--word", "u, u*"});
    CHECK(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.at("word") == nlohmann::json::array({"u", "u*"}));
    CHECK(parsed.at("limit") == "1/1");
    CHECK(parsed.at("contributing") == 1);
    CHECK(parsed.at("laurent").at("0") == "1/1");

    CHECK(nlohmann::json::parse(run({"cumulant", "--word", "u^2"}).out).at("limit") == "0/1");
}

TEST_CASE("cumulant --at-n appends an evaluation line") {
    const CliResult r = run({"cumulant", "--word", "u, u*, u, u*", "--at-n", "2"});
    CHECK(r.code == 0);
    REQUIRE(count_lines(r.out) == 2);
    std::istringstream lines(r.out);
    std::string report_line, eval_line;
    std::getline(lines, report_line);
    std::getline(lines, eval_line);
    CHECK(nlohmann::json::parse(report_line).at("laurent").at("-2") == "-1/1");
    const auto eval = nlohmann::json::parse(eval_line);
    CHECK(eval.at("n") == 2);
    CHECK(eval.at("value") == "-1/4");
}

TEST_CASE("cumulant usage and budget exits") {
    CHECK(run({"cumulant"}).code == 2);
    CHECK(run({"cumulant", "--word", "v"}).code == 2);
    CHECK(run({"cumulant", "--word", "u^2,"}).code == 2);
    CHECK(run({"cumulant", "--word", "u^15"}).code == 1);  // default enumeration limit 14
    CHECK(run({"cumulant", "--word", "u^15", "--enumeration-limit", "16"}).code == 0);
}

TEST_CASE("verify reports and exit codes") {
    const CliResult r = run({"verify", "--max-p", "4", "--max-s", "4", "--n", "1,2"});
    CHECK(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.at("checked") == 160);
    CHECK(parsed.at("mismatches").empty());
    CHECK(parsed.at("circularity").at("violations").empty());
    CHECK(parsed.at("circularity").at("words_checked") == 80);

    CHECK(run({"verify", "--max-p", "0"}).code == 2);
    CHECK(run({"verify", "--max-p", "4", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--max-p", "4", "--n", "0"}).code == 2);
}

TEST_CASE("verify csv schema") {
    const CliResult r = run({"verify", "--max-p", "3", "--n", "1,2", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "suite,metric,value");
    std::getline(lines, line);
    CHECK(line.rfind("oracle,checked,", 0) == 0);
    std::getline(lines, line);
    CHECK(line == "oracle,mismatches,0");
    std::getline(lines, line);
    CHECK(line.rfind("circularity,words_checked,", 0) == 0);
    std::getline(lines, line);
    CHECK(line == "circularity,violations,0");
}

TEST_CASE("output is byte identical across worker counts") {
    const CliResult one = run({"cumulant", "--word", "u^4, u^4*", "--workers", "1"});
    const CliResult four = run({"cumulant", "--word", "u^4, u^4*", "--workers", "4"});
    CHECK(one.code == 0);
    CHECK(four.code == 0);
    CHECK(one.out == four.out);

    const CliResult v1 = run({"verify", "--max-p", "3", "--n", "1,2", "--workers", "1"});
    const CliResult v3 = run({"verify", "--max-p", "3", "--n", "1,2", "--workers", "3"});
    CHECK(v1.out == v3.out);
}

TEST_CASE("worker count env override") {
    setenv("NCTRACE_WORKERS", "2", 1);
    const CliResult r = run({"cumulant", "--word", "u^3, u^3*"});
    unsetenv("NCTRACE_WORKERS");
    CHECK(r.code == 0);
    CHECK(r.out == run({"cumulant", "--word", "u^3, u^3*", "--workers", "1"}).out);

    setenv("NCTRACE_WORKERS", "banana", 1);
    const CliResult bad = run({"cumulant", "--word", "u, u*"});
    unsetenv("NCTRACE_WORKERS");
    CHECK(bad.code == 2);
}

TEST_CASE("unknown subcommands and flags are usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"cumulant", "--word", "u, u*", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
