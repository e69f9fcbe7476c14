#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "horadam/cli/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "horadam");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = horadam::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool every_check_passes(const json& doc) {
    for (const auto& c : doc["checks"])
        if (!c["pass"].get<bool>()) return false;
    return true;
}

}  // namespace

TEST_CASE("binom examples") {
    auto r = call({"binom", "--seq", "fibonacci", "--n", "5", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.doc()["results"]["value"] == "15");
    r = call({"binom", "--seq", "fibonacci", "--n", "0", "--k", "0"});
    CHECK(r.doc()["results"]["value"] == "1");
    r = call({"binom", "--seq", "gauss", "--n", "4", "--k", "2"});
    CHECK(r.doc()["results"]["value"] == "q^4 + q^3 + 2*q^2 + q + 1");
}

TEST_CASE("schema keys") {
    const auto doc = call({"binom", "--n", "4", "--k", "2"}).doc();
    for (const char* key : {"tool_version", "subcommand", "inputs", "results", "checks"}) CHECK(doc.contains(key));
    CHECK(doc["tool_version"] == horadam::cli::kToolVersion);
    CHECK(doc["subcommand"] == "binom");
    for (const auto& c : doc["checks"])
        for (const char* key : {"name", "pass", "lhs", "rhs"}) CHECK(c.contains(key));
}

TEST_CASE("verify husun on fibonacci to 12 passes") {
    const auto r = call({"verify", "--scheme", "husun", "--seq", "fibonacci", "--N", "12"});
    CHECK(r.code == 0);
    const auto doc = r.doc();
    CHECK(every_check_passes(doc));
    CHECK(doc["results"]["failures"].empty());
}

TEST_CASE("verify all skips inapplicable schemes") {
    auto r = call({"verify", "--scheme", "all", "--seq", "pell", "--N", "8"});
    CHECK(r.code == 0);
    CHECK(r.doc()["results"]["errors"].empty());
    r = call({"verify", "--scheme", "all", "--seq", "lucas", "--N", "6"});
    CHECK(r.code == 0);
    CHECK(!r.doc()["results"]["skipped"].empty());
}

TEST_CASE("explicitly requested inapplicable scheme fails with a report") {
    const auto r = call({"verify", "--scheme", "husun", "--seq", "lucas", "--N", "6"});
    CHECK(r.code == horadam::cli::kVerificationFailed);
    CHECK(!r.doc()["results"]["errors"].empty());
}

TEST_CASE("full subcommand matrix") {
    const std::vector<std::vector<std::string>> runs{
        {"seq", "--seq", "pell", "--N", "12"},
        {"seq", "--seq", "Uroots:p,q", "--N", "6"},
        {"seq", "--seq", "horadam:2,1,1,1", "--N", "8"},
        {"seq", "--seq", "nalpha:3", "--N", "6"},
        {"binom", "--seq", "lucas", "--n", "6", "--k", "3"},
        {"multinom", "--seq", "fibonacci", "--n", "6", "--parts", "2,2", "--k", "2"},
        {"mixed", "--seq", "fibonacci", "--r", "2", "--s", "1"},
        {"table", "--seq", "fibonacci", "--N", "6"},
        {"table", "--seq", "fibonacci", "--N", "6", "--scheme", "fontene_a"},
        {"verify", "--scheme", "corcino-a", "--scheme", "T2A_ALT", "--seq", "Uroots:p,q", "--N", "5"},
        {"verify", "--scheme", "mixed_2b", "--scheme", "mixed_doubled", "--seq", "fibonacci", "--N", "8"},
        {"closed-form", "--formula", "md", "--n", "6", "--k", "3"},
        {"closed-form", "--formula", "bp49", "--n", "6", "--k", "2"},
        {"closed-form", "--formula", "mdU", "--n", "5", "--k", "2", "--seq", "U:s,t"},
        {"closed-form", "--formula", "carlitz", "--n", "2"},
        {"closed-form", "--formula", "qstar", "--n", "5", "--k", "2"},
        {"oracle", "--model", "tilings", "--n", "6", "--s", "2", "--t", "3"},
        {"oracle", "--model", "bracelets", "--n", "6"},
        {"oracle", "--model", "paths", "--n", "6", "--k", "3"},
        {"oracle", "--model", "subspaces", "--n", "4", "--k", "2", "--qf", "4"},
        {"oracle", "--model", "graphs", "--n", "4"},
        {"oracle", "--model", "gamma", "--n", "4", "--k", "3", "--alpha", "3"},
        {"oracle", "--model", "cigler", "--m", "3", "--n", "4"},
        {"cobweb", "--seq", "naturals", "--n", "5", "--k", "2", "--search-tiling"},
        {"cobweb", "--seq", "naturals", "--n", "5", "--k", "3", "--search-tiling", "--intervals-only"},
        {"cobweb", "--seq", "gauss:2", "--n", "4", "--k", "2"},
        {"carlitz", "--n", "3"},
        {"calc", "--expr", "(s^2 - t^2)/(s - t)", "--assign", "s=2", "--assign", "t=1/3"},
        {"calc", "--expr", "s^3 - t^3", "--divide-by", "s - t"},
    };
    for (const auto& args : runs) {
        CAPTURE(args.front());
        CAPTURE(args.size() > 2 ? args[2] : std::string());
        const auto r = call(args);
        CHECK(r.code == 0);
        const auto doc = r.doc();
        CHECK(doc["subcommand"] == args.front());
        CHECK(every_check_passes(doc));
    }
}

TEST_CASE("closed-form errata reports the discrepancy without failing") {
    const auto r = call({"closed-form", "--formula", "errata", "--n", "5", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.doc()["results"]["value"] == "11");
    CHECK(r.doc()["results"]["agrees_with_factorial"] == false);
}

TEST_CASE("oracle reports") {
    auto doc = call({"oracle", "--model", "subspaces", "--n", "4", "--k", "2", "--qf", "2"}).doc();
    CHECK(doc["results"]["oracle_value"] == "35");
    CHECK(doc["results"]["equal"] == true);
    doc = call({"oracle", "--model", "graphs", "--n", "3"}).doc();
    CHECK(doc["results"]["oracle_value"] == "26");
    doc = call({"oracle", "--model", "cigler", "--m", "3", "--n", "2"}).doc();
    CHECK(doc["results"]["standard_holds"] == true);
}

TEST_CASE("cobweb report") {
    const auto doc = call({"cobweb", "--seq", "naturals", "--n", "4", "--k", "2", "--search-tiling"}).doc();
    CHECK(doc["results"]["admissible"] == true);
    CHECK(doc["results"]["chain_count"] == "12");
    CHECK(doc["results"]["binomial"] == "6");
    CHECK(doc["results"]["counting_identity"] == true);
    CHECK(doc["results"]["tiling"]["status"] == "found");
    CHECK(doc["results"]["tiling"]["blocks"].size() == 6);
}

TEST_CASE("mixed spot value") {
    CHECK(call({"mixed", "--seq", "fibonacci", "--r", "2", "--s", "1"}).doc()["results"]["value"] == "4");
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"verify", "--scheme", "all", "--seq", "fibonacci", "--N", "9"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.out == b.out);
    const std::vector<std::string> sym{"table", "--seq", "U:s,t", "--N", "6", "--format", "pretty"};
    CHECK(call(sym).out == call(sym).out);
}

TEST_CASE("csv export") {
    auto r = call({"table", "--seq", "fibonacci", "--N", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,1\n2,2,1\n3,0,1\n3,1,2\n3,2,2\n3,3,1\n");
    r = call({"table", "--seq", "gauss", "--N", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.doc()["results"]["integer"] == false);
}

TEST_CASE("exit codes") {
    const int base = horadam::cli::kErrorBase;
    auto r = call({"calc", "--expr", "s +* t"});
    CHECK(r.code >= base);
    CHECK(r.doc()["error"]["code"] == "ParseError");
    const int parse_code = r.code;
    r = call({"cobweb", "--seq", "custom:0,1,2,3,5", "--n", "4", "--k", "2"});
    CHECK(r.code >= base);
    CHECK(r.code != parse_code);
    CHECK(r.doc()["error"]["code"] == "NotAdmissible");
    r = call({"binom", "--seq", "custom:0,1,2", "--n", "5", "--k", "2"});
    CHECK(r.code >= base);
    r = call({"oracle", "--model", "subspaces", "--n", "3", "--k", "1", "--qf", "5"});
    CHECK(r.doc()["error"]["code"] == "UnsupportedField");
    CHECK(call({"binom", "--n", "3"}).code == horadam::cli::kUsage);
    CHECK(call({"frobnicate"}).code == horadam::cli::kUsage);
    CHECK(call({}).code == horadam::cli::kUsage);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"table", "--N", "3", "--scheme", "nonsense"}).code == horadam::cli::kUsage);
}

TEST_CASE("--out honors the output directory variable") {
    const auto dir = std::filesystem::temp_directory_path() / "horadam_cli_test_out";
    std::filesystem::create_directories(dir);
    ::setenv(horadam::cli::kOutputDirEnv, dir.c_str(), 1);
    const auto r = call({"binom", "--n", "5", "--k", "3", "--out", "binom.json"});
    ::unsetenv(horadam::cli::kOutputDirEnv);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(dir / "binom.json");
    REQUIRE(file);
    CHECK(json::parse(file)["results"]["value"] == "15");
    std::filesystem::remove_all(dir);

    const auto bad = call({"binom", "--n", "5", "--k", "3", "--out", "/nonexistent-dir/x/y.json"});
    CHECK(bad.code >= horadam::cli::kErrorBase);
}
