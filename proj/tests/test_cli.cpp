#include <doctest.h>

#include "supermod/cli.hpp"
#include "supermod/rootsys.hpp"

#include <json.hpp>

#include <sstream>

using namespace supermod;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("roots command emits the B(0,1) system") {
    auto r = run_cli({"roots", "--family", "B", "--m", "0", "--n", "1"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("family") == "B");
    CHECK(j.at("roots").size() == 4);
    // round trip into an equal system
    auto sys = root_system_from_json(j);
    auto direct = build_root_system(Family::B(0, 1));
    CHECK(sys.roots == direct.roots);
    CHECK(sys.gram == direct.gram);
}

TEST_CASE("deterministic output") {
    auto a = run_cli({"character", "--family", "B", "--m", "0", "--n", "2", "--lambda", "-2,-2", "--depth", "4"});
    auto b = run_cli({"character", "--family", "B", "--m", "0", "--n", "2", "--lambda", "-2,-2", "--depth", "4"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("components command matches the documented value") {
    auto r = run_cli({"components", "--family", "D21a", "--alpha", "1/2", "--form", "sl2x3"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("components_p1") == 4);
}

TEST_CASE("character command: four terms of multiplicity one") {
    auto r = run_cli({"character", "--family", "B", "--m", "0", "--n", "1", "--lambda", "5", "--depth", "3"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("terms").size() == 4);
    for (const auto& t : j.at("terms")) CHECK(t.at("mult") == 1);
    // brute-force path agrees
    auto r2 = run_cli({"character", "--family", "B", "--m", "0", "--n", "1", "--lambda", "5", "--depth", "3",
                       "--method", "bruteforce"});
    CHECK(r2.out == r.out);
}

TEST_CASE("irreducible command") {
    auto r = run_cli({"irreducible", "--family", "B", "--m", "0", "--n", "1", "--lambda", "-2", "--depth", "6"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("criterion") == true);
    CHECK(j.at("singular_vectors").empty());

    auto r2 = run_cli({"irreducible", "--family", "B", "--m", "0", "--n", "1", "--lambda", "1", "--depth", "6"});
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2.at("criterion") == false);
    CHECK(j2.at("singular_vectors").size() == 1);

    // exceptional families report the criterion without a scan
    auto r3 = run_cli({"irreducible", "--family", "G3", "--lambda", "0,0,-4"});
    auto j3 = nlohmann::json::parse(r3.out);
    CHECK(j3.at("singular_vectors").is_null());
}

TEST_CASE("linkage and typicality") {
    auto r = run_cli({"linkage", "--family", "B", "--m", "0", "--n", "1", "--lambda", "1/2", "--mu", "-3/2"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("linked") == true);

    auto r2 = run_cli({"typical", "--family", "A", "--m", "1", "--n", "0", "--p", "1", "--q", "1", "--r", "1",
                       "--s", "0", "--lambda", "-1,0,0"});
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2.at("typical") == false);

    // linkage at an atypical weight signals an argument error
    auto r3 = run_cli({"linkage", "--family", "A", "--m", "1", "--n", "0", "--p", "1", "--q", "1", "--r", "1",
                       "--s", "0", "--lambda", "-1,0,0", "--mu", "-1,0,0"});
    CHECK(r3.status == 2);
}

TEST_CASE("table command includes the simple system") {
    auto r = run_cli({"table", "--family", "G3"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("Pi").size() == 3);
    CHECK(j.at("admissible") == true);
    CHECK(j.at("components_p1") == 1);
    CHECK(j.at("P_n0").size() == 1);
    CHECK(j.at("P_n1").size() == 7);
}

TEST_CASE("argument errors exit with status 2") {
    CHECK(run_cli({"roots"}).status == 2);                                     // missing family
    CHECK(run_cli({"roots", "--family", "X"}).status == 2);                    // unknown family
    CHECK(run_cli({"roots", "--family", "A", "--m", "2", "--n", "2"}).status == 2); // A(n,n)
    CHECK(run_cli({"components", "--family", "B", "--m", "2", "--n", "1", "--form", "nope"}).status == 2);
    CHECK(run_cli({"character", "--family", "B", "--m", "0", "--n", "1", "--lambda", "1,2", "--depth",
                   "1"}).status == 2);                                         // wrong arity
    CHECK(run_cli({}).status == 2);
}

TEST_CASE("text format") {
    auto r = run_cli({"--format", "text", "components", "--family", "C", "--n", "2"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("components_p1: 2") != std::string::npos);
}

TEST_CASE("G3 lambda accepts the redundant four-coordinate form") {
    auto a = run_cli({"character", "--family", "G3", "--lambda", "0,0,-4", "--depth", "2"});
    auto b = run_cli({"character", "--family", "G3", "--lambda", "1,1,1,-4", "--depth", "2"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

} // TEST_SUITE
