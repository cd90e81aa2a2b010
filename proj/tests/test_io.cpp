#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dopk/io.hpp"
#include "dopk/report.hpp"

using namespace dopk;

TEST_CASE("grid/weight JSON parsing") {
    std::istringstream in(R"({"points": ["0", "1/2", 3], "weights": ["1", "0.25", "7/3"]})");
    const GridWeightInput parsed = read_grid_weights(in);
    REQUIRE(parsed.points.size() == 3);
    CHECK(parsed.points[1] == Rational(1, 2));
    CHECK(parsed.points[2] == Rational(3));
    CHECK(parsed.weights[1] == Rational(1, 4));
    CHECK(parsed.weights[2] == Rational(7, 3));
}

TEST_CASE("grid/weight JSON rejections") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_grid_weights(in);
    };
    CHECK_THROWS_AS(parse("not json"), parse_error);
    CHECK_THROWS_AS(parse(R"({"weights": ["1"]})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"points": ["1"]})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"points": ["1"], "weights": ["1", "2"]})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"points": [], "weights": []})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"points": [1.5], "weights": [1]})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"points": ["x"], "weights": ["1"]})"), parse_error);
}

TEST_CASE("weights follow their points through sorting") {
    GridWeightInput in;
    in.points = {Rational(2), Rational(0), Rational(1)};
    in.weights = {Rational(5), Rational(3), Rational(4)};
    auto [g, w] = to_grid_weights(in);
    CHECK(g.points() == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
    CHECK(w.values() == std::vector<Rational>{Rational(3), Rational(4), Rational(5)});
}

TEST_CASE("report serialization shape") {
    VerificationReport report("demo");
    ClauseTracker<Rational> good("always fine");
    good.check_exact(Rational(1, 2), Rational(1, 2), "(i=0)");
    report.add_clause(good.finish());
    ClauseTracker<Rational> bad("broken somewhere");
    bad.check_exact(Rational(1), Rational(3, 4), "(i=1)");
    report.add_clause(bad.finish());
    report.add_detail("constant", "42");

    CHECK_FALSE(report.pass());
    const nlohmann::json j = report.to_json();
    CHECK(j.at("report") == "demo");
    CHECK(j.at("pass") == false);
    CHECK(j.at("clauses").size() == 2);
    CHECK(j.at("clauses")[0] ==
          nlohmann::json({{"clause", "always fine"}, {"max_residual", "0"}, {"pass", true}}));
    CHECK(j.at("clauses")[1].at("max_residual") == "1/4");
    CHECK(j.at("clauses")[1].at("violations") == nlohmann::json::array({"(i=1)"}));
    CHECK(j.at("details").at("constant") == "42");

    const std::string csv = report.to_csv();
    CHECK(csv.find("clause,max_residual,pass") == 0);
    CHECK(csv.find("\"broken somewhere\",1/4,false") != std::string::npos);
}

TEST_CASE("clause tracker tolerance mode") {
    ClauseTracker<BigFloat> tracker("approximate");
    const BigFloat tol(Rational(1, 1000));
    tracker.check_tol(BigFloat(Rational(1)), BigFloat(Rational(1001, 1000)), tol, "(a)");
    CHECK(tracker.pass());
    tracker.check_tol(BigFloat(Rational(1)), BigFloat(Rational(11, 10)), tol, "(b)");
    CHECK_FALSE(tracker.pass());
    const ReportClause clause = tracker.finish();
    CHECK(clause.violations == std::vector<std::string>{"(b)"});
}

TEST_CASE("rationals_to_json emits exact strings") {
    const nlohmann::json arr = rationals_to_json({Rational(1, 3), Rational(-2)});
    CHECK(arr == nlohmann::json::array({"1/3", "-2"}));
}
