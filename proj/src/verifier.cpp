#include "motzkin/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "motzkin/bijections.hpp"

#include <json.hpp>

namespace motzkin {

namespace {

using Clock = std::chrono::steady_clock;

// Reference prefixes, embedded so the suite never needs the network.
// A001006 (Motzkin), A055217 (total area of the polyominoes / first n+1
// trinomial terms), A005717 (n * m_{n-1}).
const std::vector<BigInt> kA001006 = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511};
const std::vector<BigInt> kA055217 = {1, 3, 10, 31, 96, 294, 897, 2727, 8272, 25048};
const std::vector<BigInt> kA005717 = {1, 2, 6, 16, 45, 126, 357, 1016, 2907, 8350};

struct Failure {
    Discrepancy d;
};

class Checker {
  public:
    explicit Checker(CheckReport& report) : report_(report) {}

    template <typename Body>
    void run(const std::string& name, const std::string& scope, Body&& body) {
        CheckResult result;
        result.name = name;
        result.scope = scope;
        auto start = Clock::now();
        try {
            body(result);
            result.pass = !result.first_discrepancy.has_value();
        } catch (const Failure& f) {
            result.pass = false;
            result.first_discrepancy = f.d;
        } catch (const std::exception& e) {
            result.pass = false;
            result.first_discrepancy = Discrepancy{"exception", "", e.what()};
        }
        result.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        report_.checks.push_back(std::move(result));
    }

  private:
    CheckReport& report_;
};

[[noreturn]] void fail(const std::string& location, const std::string& expected,
                       const std::string& actual) {
    throw Failure{Discrepancy{location, expected, actual}};
}

void expect_eq(const std::string& location, const BigInt& expected, const BigInt& actual) {
    if (expected != actual) fail(location, expected.str(), actual.str());
}

void expect_series_eq(const std::string& what, const TruncSeries& expected,
                      const TruncSeries& actual) {
    TruncSeries diff = actual - expected;
    if (!diff.is_zero()) {
        int n = diff.first_nonzero();
        fail(what + " at x^" + std::to_string(n), expected.at(n).str(), actual.at(n).str());
    }
}

std::string range_scope(int lo, int hi) {
    return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

bool CheckReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string CheckReport::to_json(bool include_timing, int indent) const {
    nlohmann::ordered_json j;
    j["all_pass"] = all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["scope"] = c.scope;
        jc["status"] = c.pass ? "pass" : "fail";
        if (c.first_discrepancy) {
            jc["first_discrepancy"] = {{"location", c.first_discrepancy->location},
                                       {"expected", c.first_discrepancy->expected},
                                       {"actual", c.first_discrepancy->actual}};
        }
        if (include_timing) jc["wall_ms"] = c.wall_ms;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(indent);
}

const std::vector<std::string>& suite_check_names() {
    static const std::vector<std::string> names = {
        "counting",     "pick",     "stats-consistency",    "bijections", "series-vs-brute",
        "functional-equations", "triangles", "trinomial-height", "oeis"};
    return names;
}

CheckResult check_series_equal(const std::string& name, const std::string& scope,
                               const TruncSeries& actual, const TruncSeries& expected) {
    CheckReport report;
    Checker checker(report);
    checker.run(name, scope,
                [&](CheckResult&) { expect_series_eq(name, expected, actual); });
    return report.checks.front();
}

CheckResult check_table_rows(const std::string& name, const StatTable& actual,
                             const StatTable& expected, int n_max) {
    CheckReport report;
    Checker checker(report);
    checker.run(name, range_scope(1, n_max), [&](CheckResult&) {
        for (int n = 1; n <= n_max; ++n)
            for (int i = 1; i <= n; ++i)
                expect_eq("n=" + std::to_string(n) + " i=" + std::to_string(i),
                          expected.at(n, i), actual.at(n, i));
    });
    return report.checks.front();
}

CheckResult check_sequence(const std::string& name, const std::vector<BigInt>& actual,
                           const std::vector<BigInt>& expected, int first_index) {
    CheckReport report;
    Checker checker(report);
    checker.run(name, range_scope(first_index, first_index + static_cast<int>(expected.size()) - 1),
                [&](CheckResult&) {
                    if (actual.size() != expected.size())
                        fail("length", std::to_string(expected.size()),
                             std::to_string(actual.size()));
                    for (std::size_t i = 0; i < expected.size(); ++i)
                        expect_eq("n=" + std::to_string(first_index + static_cast<int>(i)),
                                  expected[i], actual[i]);
                });
    return report.checks.front();
}

std::map<long long, long long> stat_histogram(int n, const std::string& stat,
                                              const EnumLimits& limits) {
    std::map<long long, long long> hist;
    for (const auto& w : generate_all(n, limits)) {
        PolyominoStats st = stats(w);
        long long value = stat == "area"    ? st.area
                          : stat == "sper"  ? st.sper
                          : stat == "inter" ? st.inter
                          : stat == "last"  ? st.last
                                            : throw Error("unknown statistic '" + stat + "'");
        ++hist[value];
    }
    return hist;
}

CheckReport run_suite(int n_max, const std::set<std::string>& selection) {
    CheckReport report;
    Checker checker(report);
    auto selected = [&](const std::string& name) {
        return selection.empty() || selection.count(name) > 0;
    };
    for (const auto& name : selection)
        if (std::find(suite_check_names().begin(), suite_check_names().end(), name) ==
            suite_check_names().end())
            throw Error("unknown check '" + name + "'");

    // words regenerated per check are cheap at suite scale; share one pass
    std::vector<std::vector<MotzkinWord>> words(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) words[static_cast<std::size_t>(n)] = generate_all(n);

    if (selected("counting")) {
        checker.run("counting", range_scope(1, n_max), [&](CheckResult&) {
            for (int n = 1; n <= n_max; ++n) {
                expect_eq("|M_" + std::to_string(n) + "|", motzkin_number(n - 1),
                          BigInt(words[static_cast<std::size_t>(n)].size()));
                std::map<int, long long> by_last;
                for (const auto& w : words[static_cast<std::size_t>(n)]) ++by_last[w.last()];
                for (int k = 1; k <= n; ++k)
                    expect_eq("|M_{" + std::to_string(n) + "," + std::to_string(k) + "}|",
                              m_nk(n, k), BigInt(by_last.count(k) ? by_last[k] : 0));
            }
        });
    }

    if (selected("pick")) {
        checker.run("pick", range_scope(1, n_max), [&](CheckResult&) {
            for (int n = 1; n <= n_max; ++n)
                for (const auto& w : words[static_cast<std::size_t>(n)]) {
                    PolyominoStats st = stats(w);
                    if (st.area != st.inter + st.sper - 1)
                        fail("word " + w.str(),
                             "area = inter + sper - 1 = " +
                                 std::to_string(st.inter + st.sper - 1),
                             "area = " + std::to_string(st.area));
                }
        });
    }

    if (selected("stats-consistency")) {
        checker.run("stats-consistency", range_scope(1, n_max), [&](CheckResult&) {
            for (int n = 1; n <= n_max; ++n)
                for (const auto& w : words[static_cast<std::size_t>(n)]) {
                    if (stats(w) != stats_formula(w))
                        fail("word " + w.str(), "geometric stats == formula stats",
                             "mismatch");
                }
        });
    }

    if (selected("bijections")) {
        checker.run("bijections", range_scope(1, std::max(1, n_max)), [&](CheckResult&) {
            for (int n = 1; n <= n_max; ++n) {
                std::set<LatticePath> motzkin_paths, luka_paths, dyck_paths;
                std::set<MotzkinWord> phi_images;
                for (const auto& w : words[static_cast<std::size_t>(n)]) {
                    LatticePath pm = psi(w);
                    if (psi_inv(pm) != w)
                        fail("psi round trip, word " + w.str(), w.str(), psi_inv(pm).str());
                    motzkin_paths.insert(pm);
                    PolyominoStats st = stats(w);
                    if (st.sper != 2LL * n - up_steps(pm))
                        fail("semiperimeter transport, word " + w.str(),
                             std::to_string(2LL * n - up_steps(pm)), std::to_string(st.sper));
                    LatticePath pl = to_lukasiewicz(w);
                    if (pl.length() != n + 1 || !pl.is_primitive() || pl.has_flat_step())
                        fail("lukasiewicz image, word " + w.str(),
                             "primitive zero-step-free length " + std::to_string(n + 1),
                             pl.str());
                    if (from_lukasiewicz(pl) != w)
                        fail("lukasiewicz round trip, word " + w.str(), w.str(),
                             from_lukasiewicz(pl).str());
                    luka_paths.insert(pl);
                    LatticePath pd = to_dyck_udu(w);
                    if (from_dyck_udu(pd) != w)
                        fail("dyck round trip, word " + w.str(), w.str(),
                             from_dyck_udu(pd).str());
                    dyck_paths.insert(pd);
                }
                std::size_t count = words[static_cast<std::size_t>(n)].size();
                if (motzkin_paths.size() != count)
                    fail("psi injectivity at n=" + std::to_string(n), std::to_string(count),
                         std::to_string(motzkin_paths.size()));
                if (luka_paths.size() != count || dyck_paths.size() != count)
                    fail("injectivity at n=" + std::to_string(n), std::to_string(count),
                         "luka " + std::to_string(luka_paths.size()) + ", dyck " +
                             std::to_string(dyck_paths.size()));
                if (n >= 2) {
                    // phi maps the restricted Catalan words of length n-1 onto M_n
                    std::set<MotzkinWord> image;
                    for (const auto& c : generate_catalan_avoiding(n - 1)) {
                        MotzkinWord w = phi(c);
                        if (w.size() != n)
                            fail("phi length, input " + c.str(), std::to_string(n),
                                 std::to_string(w.size()));
                        image.insert(w);
                    }
                    if (image.size() != count)
                        fail("phi bijectivity at n=" + std::to_string(n),
                             std::to_string(count), std::to_string(image.size()));
                }
            }
        });
    }

    if (selected("series-vs-brute")) {
        checker.run("series-vs-brute", "order " + std::to_string(n_max), [&](CheckResult&) {
            TruncSeries b = brute_gf(n_max);
            TruncSeries bi = brute_inter_gf(n_max);
            expect_series_eq("S(x,p) vs brute", set_var_one(set_var_one(b, Var::q), Var::v),
                             S_xp(n_max));
            expect_series_eq("A(x;p,1;v) vs brute", set_var_one(b, Var::q), A_xpv(n_max));
            TruncSeries bv = set_var_one(set_var_one(b, Var::p), Var::q);
            AuxCaps vcaps = AuxCaps::of(-1, -1, n_max);
            expect_series_eq("A(x;1,1;v)v vs brute",
                             make_series({{0, 1, 0, 0, 1}}, n_max, vcaps) *
                                 bv.truncated_to(n_max, vcaps),
                             A_xv_lastsymbol(n_max));
            expect_series_eq("U(x,q) vs brute", set_var_one(set_var_one(b, Var::p), Var::v),
                             U_xq(n_max));
            expect_series_eq("H(x,q) vs brute", set_var_one(bi, Var::v),
                             H_interior_xq(n_max));
            expect_series_eq("continued fraction vs 1+U",
                             TruncSeries::constant(1, n_max) +
                                 set_var_one(set_var_one(b, Var::p), Var::v),
                             continued_fraction_xq(n_max));
        });
    }

    if (selected("functional-equations")) {
        int order = std::min(n_max, 10);
        checker.run("functional-equations", "order " + std::to_string(order),
                    [&](CheckResult&) {
                        EquationReport a3 = check_eqA3(brute_gf(order));
                        if (!a3.zero) fail("eqA3 residual", "0", a3.first_residual);
                        EquationReport in = check_interior_equation(brute_inter_gf(order));
                        if (!in.zero) fail("interior residual", "0", in.first_residual);
                    });
    }

    if (selected("triangles")) {
        checker.run("triangles", range_scope(1, n_max), [&](CheckResult&) {
            StatTable s = s_table(n_max), u = u_table(n_max), h = h_table(n_max);
            StatTable walk = walks(n_max);
            for (int n = 1; n <= n_max; ++n) {
                std::map<int, BigInt> s_enum, u_enum, h_enum;
                for (const auto& w : words[static_cast<std::size_t>(n)]) {
                    PolyominoStats st = stats(w);
                    s_enum[w.last()] += st.sper;
                    u_enum[w.last()] += st.area;
                    for (const auto& [level, cells] : st.height_histogram)
                        h_enum[level] += cells;
                }
                for (int i = 1; i <= n; ++i) {
                    expect_eq("s(" + std::to_string(n) + "," + std::to_string(i) + ")",
                              s_enum.count(i) ? s_enum[i] : BigInt(0), s.at(n, i));
                    expect_eq("u(" + std::to_string(n) + "," + std::to_string(i) + ")",
                              u_enum.count(i) ? u_enum[i] : BigInt(0), u.at(n, i));
                    expect_eq("h(" + std::to_string(n) + "," + std::to_string(i) + ")",
                              h_enum.count(i) ? h_enum[i] : BigInt(0), h.at(n, i));
                    expect_eq("walks g(" + std::to_string(n) + "," + std::to_string(i) + ")",
                              h.at(n, i), walk.at(n, i));
                }
                expect_eq("row sum s(" + std::to_string(n) + ")", s_total(n), s.row_sum(n));
                expect_eq("row sum u(" + std::to_string(n) + ")", u_total(n), u.row_sum(n));
                expect_eq("row sum h(" + std::to_string(n) + ")", u_total(n), h.row_sum(n));
            }
        });
    }

    if (selected("trinomial-height")) {
        checker.run("trinomial-height", range_scope(1, std::max(n_max, 20)), [&](CheckResult&) {
            int hi = std::max(n_max, 20);
            StatTable h = h_table(hi);
            for (int n = 1; n <= hi; ++n) {
                for (int i = 0; i < n; ++i)
                    expect_eq("h(" + std::to_string(n) + "," + std::to_string(n - i) +
                                  ") vs T(" + std::to_string(n) + "," + std::to_string(i) + ")",
                              trinomial(n, i), h.at(n, n - i));
                BigInt row = 0;
                for (int i = 0; i <= 2 * n; ++i) {
                    row += trinomial(n, i);
                    expect_eq("palindromy T(" + std::to_string(n) + "," + std::to_string(i) + ")",
                              trinomial(n, 2 * n - i), trinomial(n, i));
                }
                expect_eq("trinomial row sum n=" + std::to_string(n),
                          int_pow(3, static_cast<unsigned>(n)), row);
                expect_eq("2u(n)+T_n=3^n at n=" + std::to_string(n),
                          int_pow(3, static_cast<unsigned>(n)),
                          2 * u_total(n) + central_trinomial(n));
                expect_eq("u=int+s-m at n=" + std::to_string(n), u_total(n),
                          int_total(n) + s_total(n) - motzkin_number(n - 1));
            }
        });
    }

    if (selected("oeis")) {
        checker.run("oeis", "embedded prefixes", [&](CheckResult&) {
            for (std::size_t i = 0; i < kA001006.size(); ++i)
                expect_eq("A001006[" + std::to_string(i) + "]", kA001006[i],
                          motzkin_number(static_cast<int>(i)));
            for (std::size_t i = 0; i < kA055217.size(); ++i)
                expect_eq("A055217[" + std::to_string(i + 1) + "]", kA055217[i],
                          u_total(static_cast<int>(i) + 1));
            StatTable h = h_table(static_cast<int>(kA005717.size()));
            for (std::size_t i = 0; i < kA005717.size(); ++i)
                expect_eq("A005717[" + std::to_string(i + 1) + "]", kA005717[i],
                          h.at(static_cast<int>(i) + 1, 1));
        });
    }

    return report;
}

}  // namespace motzkin
