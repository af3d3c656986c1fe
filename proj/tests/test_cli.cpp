#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "semiring_lab/cli.hpp"
#include "semiring_lab/json_io.hpp"
#include "oracles.hpp"

using namespace semiring_lab;
using semiring_lab::json::Json;

namespace {

const std::string kGolden = SEMIRING_LAB_GOLDEN_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(line);
    while (std::getline(in, part, '\t')) {
        parts.push_back(part);
    }
    return parts;
}

class ScopedEnv {
  public:
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }

  private:
    const char* name_;
};

}  // namespace

TEST_CASE("golden outputs") {
    std::ifstream cases(kGolden + "/cases.txt");
    REQUIRE(cases);
    std::string line;
    std::size_t checked = 0;
    while (std::getline(cases, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto parts = split_tabs(line);
        const std::string golden = parts.front();
        std::vector<std::string> args(parts.begin() + 1, parts.end());
        for (auto& a : args) {
            if (a.front() == '@') a = kGolden + "/" + a.substr(1);
        }
        const Run r = run(args);
        CAPTURE(golden);
        CHECK(("exit " + std::to_string(r.code) + "\n" + r.out) == slurp(kGolden + "/" + golden));
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("golden contents agree with the naive oracles") {
    const Run z4 = run({"congruences", "--list", kGolden + "/z4.json"});
    const Json j = Json::parse(z4.out);
    oracle::Tables t = oracle::tables_of(json::semiring_from_json(Json::parse(slurp(kGolden + "/z4.json"))));
    CHECK(j["count"].get<std::size_t>() == oracle::congruences(t).size());
    CHECK(j["simplicity"]["simple"] == false);

    std::size_t lines = 0;
    std::istringstream enumerated(run({"enumerate", "--order", "2"}).out);
    for (std::string l; std::getline(enumerated, l);) {
        CHECK(oracle::axioms_hold(oracle::tables_of(json::semiring_from_json(Json::parse(l)))));
        ++lines;
    }
    CHECK(lines == oracle::all_semirings(2).size());
}

TEST_CASE("validate reports validity") {
    const Run ok = run({"validate", kGolden + "/boolean.json"});
    CHECK(ok.code == kExitOk);
    CHECK(Json::parse(ok.out) == Json::parse(R"({"valid":true,"order":2})"));

    const Run bad = run({"validate", kGolden + "/not_semiring.json"});
    CHECK(bad.code == kExitFailure);
    const Json j = Json::parse(bad.out);
    CHECK(j["valid"] == false);
    CHECK(j["error"] == "AxiomViolation");
    CHECK(j["witness"].size() == 3);
}

TEST_CASE("inline JSON is accepted wherever a file is") {
    const std::string inline_json = slurp(kGolden + "/boolean.json");
    CHECK(run({"props", inline_json}).out == run({"props", kGolden + "/boolean.json"}).out);
}

TEST_CASE("usage errors exit 2 without JSON on stdout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"validate", "--no-such-flag", kGolden + "/boolean.json"},
             {"validate", kGolden + "/missing.json"},
             {"frobnicate"},
             {"verify", "--corpus", "builtin-order9"},
             {"matrix", kGolden + "/boolean.json", "--n", "2", "--qpa", "5"},
             {"qplus", "--a", "1/2", "--p", "x", "member", "3"}}) {
        const Run r = run(args);
        CAPTURE(args.front());
        CHECK(r.code == kExitUsage);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("domain errors produce structured JSON and exit 1") {
    const Run bad_a = run({"qplus", "--a", "3/2", "--p", "2", "member", "3"});
    CHECK(bad_a.code == kExitFailure);
    CHECK(Json::parse(bad_a.out).contains("error"));

    const Run not_member = run({"qplus", "--a", "1/2", "--p", "2", "leq", "1", "3"});
    CHECK(not_member.code == kExitFailure);
    CHECK(Json::parse(not_member.out)["error"] == "NotMember");

    const Run too_big = run({"matrix", kGolden + "/z4.json", "--n", "4"});
    CHECK(too_big.code == kExitFailure);
    CHECK(Json::parse(too_big.out)["error"] == "BoundExceeded");
}

TEST_CASE("bound can be overridden from the environment") {
    {
        ScopedEnv env("SEMIRING_LAB_BOUND", "10");
        const Run r = run({"matrix", kGolden + "/boolean.json", "--n", "2"});
        CHECK(r.code == kExitFailure);
        CHECK(Json::parse(r.out)["error"] == "BoundExceeded");
    }
    {
        ScopedEnv env("SEMIRING_LAB_BOUND", "zero");
        CHECK(run({"matrix", kGolden + "/boolean.json", "--n", "2"}).code == kExitUsage);
    }
    CHECK(run({"matrix", kGolden + "/boolean.json", "--n", "2"}).code == kExitOk);
}

TEST_CASE("verify on the order-2 corpus is clean and deterministic") {
    const Run first = run({"verify", "--corpus", "builtin-order2"});
    const Run second = run({"verify", "--corpus", "builtin-order2"});
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
    const Json j = Json::parse(first.out);
    CHECK(j.size() == 10);
    for (const auto& instance : j) {
        CHECK(instance["violations"] == 0);
    }
}

TEST_CASE("verify restricted to one statement") {
    const Run r = run({"verify", "--corpus", kGolden + "/z4.json", "--statement", "archimedean_transfer"});
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    REQUIRE(j.size() == 1);
    REQUIRE(j[0]["entries"].size() == 1);
    CHECK(j[0]["entries"][0]["statement"] == "archimedean_transfer");
    CHECK(run({"verify", "--corpus", kGolden + "/z4.json", "--statement", "nonexistent"}).code != kExitOk);
}

TEST_CASE("pretty output parses to the same document") {
    const Run plain = run({"props", kGolden + "/z4.json"});
    const Run pretty = run({"--pretty", "props", kGolden + "/z4.json"});
    CHECK(plain.out != pretty.out);
    CHECK(Json::parse(plain.out) == Json::parse(pretty.out));
}

TEST_CASE("help exits 0") {
    const Run r = run({"--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("verify") != std::string::npos);
}
