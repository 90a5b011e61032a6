#include <doctest.h>

#include <json.hpp>

#include "motzkin/verifier.hpp"

using namespace motzkin;

TEST_CASE("full suite passes at n_max = 7") {
    CheckReport report = run_suite(7);
    for (const auto& c : report.checks) {
        CAPTURE(c.name);
        if (c.first_discrepancy) {
            CAPTURE(c.first_discrepancy->location);
            CAPTURE(c.first_discrepancy->expected);
            CAPTURE(c.first_discrepancy->actual);
        }
        CHECK(c.pass);
    }
    CHECK(report.all_pass());
    CHECK(report.checks.size() == suite_check_names().size());
}

TEST_CASE("selection restricts the suite") {
    CheckReport report = run_suite(5, {"counting", "pick"});
    REQUIRE(report.checks.size() == 2);
    CHECK(report.checks[0].name == "counting");
    CHECK(report.checks[1].name == "pick");
    CHECK(report.all_pass());
    CHECK_THROWS_AS(run_suite(5, {"not-a-check"}), Error);
}

TEST_CASE("histograms match the series coefficients") {
    CHECK(stat_histogram(5, "sper") == std::map<long long, long long>{{8, 2}, {9, 6}, {10, 1}});
    CHECK(stat_histogram(5, "area") ==
          std::map<long long, long long>{{7, 1}, {9, 3}, {11, 2}, {12, 1}, {13, 1}, {15, 1}});
    CHECK(stat_histogram(5, "inter") ==
          std::map<long long, long long>{{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 1}});
    CHECK(stat_histogram(1, "area") == std::map<long long, long long>{{1, 1}});
    CHECK(stat_histogram(1, "last") == std::map<long long, long long>{{1, 1}});
    CHECK_THROWS_AS(stat_histogram(3, "bogus"), Error);
}

TEST_CASE("report JSON is deterministic") {
    CheckReport a = run_suite(5);
    CheckReport b = run_suite(5);
    CHECK(a.to_json(false) == b.to_json(false));
    // timing fields are the only nondeterminism
    CHECK(a.to_json(true).find("wall_ms") != std::string::npos);
    CHECK(a.to_json(false).find("wall_ms") == std::string::npos);
}

TEST_CASE("report and series JSON parse back") {
    CheckReport report = run_suite(4, {"counting"});
    nlohmann::json j = nlohmann::json::parse(report.to_json(true));
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["checks"].size() == 1);
    CHECK(j["checks"][0]["name"] == "counting");

    nlohmann::json s = nlohmann::json::parse(series_to_json(U_xq(4)));
    CHECK(s["order"].get<int>() == 4);
    CHECK(s["terms"][0]["q"].get<int>() == 1);
    CHECK(s["terms"][0]["num"].get<std::string>() == "1");
}

TEST_CASE("mutation: flipped series coefficient is caught") {
    TruncSeries good = S_xp(6);
    TruncSeries bad = good;
    bad.at(5).add_term(Mono{{9, 0, 0}}, 1);  // 6p^9 -> 7p^9
    CHECK(check_series_equal("series", "order 6", good, good).pass);
    CheckResult r = check_series_equal("series", "order 6", bad, good);
    CHECK(!r.pass);
    REQUIRE(r.first_discrepancy.has_value());
    CHECK(r.first_discrepancy->location.find("x^5") != std::string::npos);
}

TEST_CASE("mutation: perturbed brute series fails the functional equation") {
    TruncSeries b = brute_gf(6);
    b.at(4).add_term(Mono{{7, 7, 0}}, 1);
    CHECK(!check_eqA3(b).zero);
}

TEST_CASE("mutation: perturbed brute series fails a specialization comparison") {
    TruncSeries b = brute_gf(6);
    b.at(3).add_term(Mono{{5, 5, 0}}, -1);  // remove the word 121's monomial
    CheckResult r = check_series_equal("S vs brute", "order 6",
                                       set_var_one(set_var_one(b, Var::q), Var::v), S_xp(6));
    CHECK(!r.pass);
}

TEST_CASE("mutation: bumped table entry is caught") {
    StatTable good = s_table(6);
    StatTable bad = good;
    bad.set(5, 2, good.at(5, 2) + 1);
    CHECK(check_table_rows("s-table", good, s_table(6), 6).pass);
    CheckResult r = check_table_rows("s-table", bad, s_table(6), 6);
    CHECK(!r.pass);
    REQUIRE(r.first_discrepancy.has_value());
    CHECK(r.first_discrepancy->location == "n=5 i=2");
    CHECK(r.first_discrepancy->expected == "18");
    CHECK(r.first_discrepancy->actual == "19");
}

TEST_CASE("mutation: wrong sequence value is caught") {
    std::vector<BigInt> good = {1, 1, 2, 4, 9};
    std::vector<BigInt> bad = {1, 1, 2, 5, 9};
    CHECK(check_sequence("motzkin", good, good, 0).pass);
    CheckResult r = check_sequence("motzkin", bad, good, 0);
    CHECK(!r.pass);
    REQUIRE(r.first_discrepancy.has_value());
    CHECK(r.first_discrepancy->location == "n=3");
}

TEST_CASE("mutation: flipped statistic value is caught by the histogram check") {
    auto good = stat_histogram(5, "sper");
    auto bad = good;
    ++bad[9];
    --bad[8];
    CHECK(bad != good);
    // the sper histogram must match the S(x,p) coefficient; the mutated one cannot
    SparsePoly from_bad;
    for (const auto& [value, count] : bad)
        from_bad.add_term(Mono{{static_cast<int>(value), 0, 0}}, count);
    CHECK(from_bad != S_xp(5).at(5));
    SparsePoly from_good;
    for (const auto& [value, count] : good)
        from_good.add_term(Mono{{static_cast<int>(value), 0, 0}}, count);
    CHECK(from_good == S_xp(5).at(5));
}
