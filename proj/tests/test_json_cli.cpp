#include "random_models.hpp"

#include "pairstab/cli.hpp"
#include "pairstab/error.hpp"
#include "pairstab/json_io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace pairstab;
using jsonio::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PAIRSTAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("rational and polynomial JSON") {
    CHECK(jsonio::to_json(Rational(-3, 4)) == "-3/4");
    CHECK(jsonio::rational_from(Json(5), "/x") == 5);
    CHECK(jsonio::rational_from(Json("6/4"), "/x") == Rational(3, 2));
    CHECK_THROWS_AS(jsonio::rational_from(Json(1.5), "/x"), InvalidInput);
    CHECK_THROWS_WITH(jsonio::poly_from(Json::parse(R"(["1", "a"])"), "/P"),
                      doctest::Contains("/P/1"));
    CHECK(jsonio::to_json(RatPoly{2, 2}) == Json::parse(R"(["2/1","2/1"])"));
    CHECK(jsonio::poly_from(Json::parse(R"(["1", 0, "0/3"])"), "").degree() == 0);
}

TEST_CASE("model JSON round trip on random models") {
    testgen::Rng rng(123);
    for (int k = 0; k < 100; ++k) {
        auto inst = testgen::random_pair(rng);
        if (!inst.model.subobjects.empty()) inst.model.subobjects[0].h0_at[4] = 7;
        const Json j = jsonio::to_json(inst.model);
        const PairModel back = jsonio::model_from(j, "");
        CHECK(jsonio::to_json(back) == j);
        CHECK(back.subobjects.size() == inst.model.subobjects.size());
    }
}

TEST_CASE("report JSON round trips") {
    const Json model = Json::parse(R"({"dim_X": 1, "P": ["2","2"], "subobjects": [{"P_F": ["2","1"]}]})");
    const PairModel m = jsonio::model_from(model, "");
    const Verdict v = check_semistable(m, {2});
    CHECK(jsonio::to_json(jsonio::verdict_from(jsonio::to_json(v), "")) == jsonio::to_json(v));
    const GradedObject g = jordan_holder(m, {2});
    CHECK(jsonio::graded_from(jsonio::to_json(g), "") == g);
    const ChamberReport r = chamber_report(m, DeltaRay{{1}});
    CHECK(jsonio::to_json(jsonio::chamber_report_from(jsonio::to_json(r), "")) == jsonio::to_json(r));

    SystemModel s;
    s.sections = 2;
    s.hilbert = {2, 2};
    s.dim_x = 1;
    s.subobjects.push_back({RatPoly{2, 1}, 1, false});
    CHECK(jsonio::to_json(jsonio::system_from(jsonio::to_json(s), "")) == jsonio::to_json(s));

    GitPointModel pt;
    pt.space_dim = 3;
    pt.sections_at_l = 5;
    pt.n2 = Rational(2, 3);
    pt.subspaces.push_back({1, 2, true, RatPoly{1, 1}});
    CHECK(jsonio::to_json(jsonio::point_from(jsonio::to_json(pt), "")) == jsonio::to_json(pt));

    const WeightVector w{{-1, 1}, {0, 1, 5}, 2};
    CHECK(jsonio::to_json(jsonio::weight_from(jsonio::to_json(w), "")) == jsonio::to_json(w));
}

TEST_CASE("parse errors name the field") {
    CHECK_THROWS_WITH(jsonio::model_from(Json::parse(R"({"P": ["1"]})"), "/model"),
                      doctest::Contains("dim_X"));
    CHECK_THROWS_WITH(
        jsonio::model_from(Json::parse(R"({"dim_X": 1, "P": ["1"], "subobjects": [{"P_F": ["1"], "saturated": 3}]})"),
                           "/model"),
        doctest::Contains("/model/subobjects/0/saturated"));
    CHECK_THROWS_WITH(jsonio::point_from(Json::parse(R"({"p": -1})"), "/point"),
                      doctest::Contains("/point/p"));
    CHECK_THROWS_AS(jsonio::parse("{not json"), InvalidInput);
}

TEST_CASE("cli check on the worked model") {
    const Result r = run({"check", data("worked_check.json")});
    CHECK(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["verdict"]["status"] == "StrictlySemistable");
    CHECK(out["verdict"]["witnesses"][0]["record"] == 0);
    CHECK_FALSE(out.contains("records"));

    const Result strict = run({"check", "--strict", "--explain", data("worked_check.json")});
    CHECK(strict.code == 0);
    const Json s = Json::parse(strict.out);
    CHECK(s["verdict"]["holds"] == false);
    CHECK(s["records"][0]["ordering"] == "Equal");
    CHECK(s["quotient_form"]["status"] == "StrictlySemistable");
}

TEST_CASE("cli reads stdin and is deterministic") {
    std::ifstream f(data("worked_check.json"));
    std::stringstream buf;
    buf << f.rdbuf();
    const Result a = run({"check", "-"}, buf.str());
    const Result b = run({"check"}, buf.str());
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == run({"check", data("worked_check.json")}).out);
}

TEST_CASE("cli exit codes for invalid input") {
    const Result bad = run({"check", data("malformed_poly.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("/model/P/1") != std::string::npos);
    CHECK(run({"check", "-"}, "[1, 2").code == 1);
    CHECK(run({"check", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    // semantically invalid: record larger than the ambient
    const Result invalid = run({"check", "-"}, R"({"model": {"dim_X": 1, "P": ["2","2"],
        "subobjects": [{"P_F": ["0","3"]}]}, "delta": ["1"]})");
    CHECK(invalid.code == 1);
    CHECK(invalid.err.find("record 0") != std::string::npos);
}

TEST_CASE("cli large delta regime") {
    const Result r = run({"check", "-"}, R"({"model": {"dim_X": 1, "P": ["2","2"],
        "subobjects": [{"P_F": ["2","1"], "contains_image": true}]}, "delta": ["0","1"]})");
    CHECK(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["regime"] == "large_delta");
    CHECK(out["verdict"]["status"] == "Unstable");
}

TEST_CASE("cli jh") {
    const Result r = run({"jh", "--explain", data("jh_three_pieces.json")});
    REQUIRE(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["status"] == "StrictlySemistable");
    CHECK(out["graded"]["factors"].size() == 3);
    CHECK(out["unique"] == true);
    const GradedObject g = jsonio::graded_from(out["graded"], "");
    CHECK(g.total() == RatPoly{1, 3});
    CHECK(g.framing_count() == 1);
}

TEST_CASE("cli walls with grid check") {
    const Result r = run({"walls", "--grid-check", "100", data("worked_walls.json")});
    REQUIRE(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["report"]["walls"][0]["t"] == "2/1");
    CHECK(out["grid_check"]["ok"] == true);
    CHECK(out["grid_check"]["points"] == 101);
    CHECK(out["delta_max"]["t_star"] == "2/1");
    // the emitted report re-parses
    CHECK_NOTHROW(jsonio::chamber_report_from(out["report"], ""));
}

TEST_CASE("cli git") {
    const Result r = run({"git", "--explain", data("git_point.json")});
    REQUIRE(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["verdict"]["status"] == "StrictlySemistable");
    CHECK(out["pairings"][0]["pairing"] == "0/1");  // -(-1 + 2) + 1
    CHECK(out["subspaces"][0]["lhs"] == "2/1");
    CHECK(out["subspaces"][0]["rhs"] == "2/1");
}

TEST_CASE("cli git from a pair") {
    const Result r = run({"git", data("git_from_pair.json")});
    REQUIRE(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["point"]["p"] == 4);
    CHECK(out["point"]["rho"] == 8);
    CHECK(out["point"]["n2"] == "4/3");
    CHECK(out["verdict"]["status"] == "StrictlySemistable");
    const Result bad = run({"git", data("worked_check.json")});  // no m, l
    CHECK(bad.code == 1);
}

TEST_CASE("cli bounds") {
    const Result r = run({"bounds", data("bounds.json")});
    REQUIRE(r.code == 0);
    const Json out = Json::parse(r.out);
    CHECK(out["mu_from_muhat"] == "2/1");
    CHECK(out["bound_C"] == "4/1");
    CHECK(out["simpson"] == "6/1");
    CHECK(out["section_criteria"]["cond_ii"]["status"] == "Stable");
    CHECK(out["section_criteria"]["cond_iii"]["status"] == "Stable");
    CHECK(run({"bounds", "-"}, "{}").code == 1);
}

TEST_CASE("cli systems") {
    const Result check = run({"systems", "check", data("system.json")});
    REQUIRE(check.code == 0);
    const Json c = Json::parse(check.out);
    CHECK(c["verdict"]["status"] == "StrictlySemistable");
    CHECK(c["pair_verdict"]["status"] == "StrictlySemistable");

    const Result conv = run({"systems", "to-pair", data("system.json")});
    REQUIRE(conv.code == 0);
    const Json p = Json::parse(conv.out);
    CHECK(p["delta"] == Json::parse(R"(["2/1"])"));
    CHECK(p["model"]["subobjects"][0]["contains_image"] == false);
    CHECK_NOTHROW(jsonio::model_from(p["model"], ""));

    const Result walls = run({"systems", "walls", data("system.json")});
    REQUIRE(walls.code == 0);
    CHECK(Json::parse(walls.out)["report"]["walls"][0]["t"] == "1/1");

    CHECK(run({"systems"}).code == 1);
}

TEST_CASE("cli selftest") {
    const Result r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("identities verified: ", 0) == 0);
    std::vector<std::string> failures;
    CHECK(cli::selftest(failures) > 100);
    CHECK(failures.empty());
}
