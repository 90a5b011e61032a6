// Acceptance suite: every criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "motzkin/bijections.hpp"
#include "motzkin/builders.hpp"
#include "motzkin/formulas.hpp"
#include "motzkin/verifier.hpp"
#include "motzkin/word.hpp"

using namespace motzkin;

namespace {

struct Criterion {
    std::string label;
    std::function<void()> body;  // throws std::runtime_error on failure
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw std::runtime_error(detail);
}

template <typename T>
std::string str_of(const T& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SparsePoly poly_from_hist(const std::map<long long, long long>& hist, Var var) {
    SparsePoly p;
    for (const auto& [value, count] : hist) {
        Mono m;
        m[var] = static_cast<int>(value);
        p.add_term(m, count);
    }
    return p;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1. counting |M_n| = m_{n-1} for n <= 14 within 5 s", [] {
        const std::vector<BigInt> paper = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
        for (std::size_t i = 0; i < paper.size(); ++i)
            require(motzkin_number((int)i) == paper[i], "m_" + std::to_string(i) + " mismatch");
        auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 14; ++n)
            require(BigInt(generate_all(n).size()) == motzkin_number(n - 1),
                    "count mismatch at n=" + std::to_string(n));
        double elapsed = seconds_since(start);
        require(elapsed < 5.0, "took " + str_of(elapsed) + " s");
    }});

    criteria.push_back({"2. M_5 equals the nine listed words verbatim", [] {
        std::vector<std::string> expected = {"12121", "12123", "12312", "12321", "12323",
                                             "12341", "12342", "12343", "12345"};
        auto words = generate_all(5);
        require(words.size() == expected.size(), "wrong count");
        for (std::size_t i = 0; i < expected.size(); ++i)
            require(words[i].str() == expected[i],
                    "word " + std::to_string(i) + " is " + words[i].str());
    }});

    criteria.push_back({"3. statistics goldens at n = 5", [] {
        PolyominoStats st = stats(MotzkinWord::parse("12341"));
        require(st.area == 11 && st.sper == 9 && st.inter == 3, "stats(12341) wrong");
        require(stat_histogram(5, "sper") ==
                    std::map<long long, long long>{{8, 2}, {9, 6}, {10, 1}},
                "sper histogram wrong");
        require(poly_from_hist(stat_histogram(5, "area"), Var::q) == U_xq(5).at(5),
                "area histogram does not match U(x,q) at x^5");
        require(poly_from_hist(stat_histogram(5, "inter"), Var::q) == H_interior_xq(5).at(5),
                "interior histogram does not match H(x,q) at x^5");
    }});

    criteria.push_back({"4. brute-force GF equals all closed forms to x^12 within 60 s", [] {
        auto start = std::chrono::steady_clock::now();
        int order = 12;
        TruncSeries b = brute_gf(order);
        require(set_var_one(set_var_one(b, Var::q), Var::v) == S_xp(order), "S(x,p)");
        require(set_var_one(b, Var::q) == A_xpv(order), "A(x;p,1;v)");
        AuxCaps vcaps = AuxCaps::of(-1, -1, order);
        TruncSeries bv = set_var_one(set_var_one(b, Var::p), Var::q).truncated_to(order, vcaps);
        require(make_series({{0, 1, 0, 0, 1}}, order, vcaps) * bv == A_xv_lastsymbol(order),
                "A(x;1,1;v)v");
        require(set_var_one(set_var_one(b, Var::p), Var::v) == U_xq(order), "U(x,q)");
        require(set_var_one(brute_inter_gf(order), Var::v) == H_interior_xq(order), "H(x,q)");
        double elapsed = seconds_since(start);
        require(elapsed < 60.0, "took " + str_of(elapsed) + " s");
    }});

    criteria.push_back({"5. functional equations have zero residual to x^10", [] {
        EquationReport a3 = check_functional_equation("eqA3", 10);
        require(a3.zero, "eqA3 residual " + a3.first_residual);
        EquationReport in = check_functional_equation("interior", 10);
        require(in.zero, "interior residual " + in.first_residual);
    }});

    criteria.push_back({"6. continued fraction equals 1 + U(x,q) to x^12", [] {
        TruncSeries u = U_xq(12);
        require(continued_fraction_xq(12) == TruncSeries::constant(1, 12, u.caps) + u,
                "expansion mismatch");
    }});

    criteria.push_back({"7. closed-form sequence identities for n <= 20", [] {
        const std::vector<BigInt> s_ref = {2, 4, 11, 29, 80, 222, 624, 1766, 5030, 14396};
        const std::vector<BigInt> u_ref = {1, 3, 10, 31, 96, 294, 897, 2727, 8272, 25048};
        const std::vector<BigInt> int_ref = {0, 0, 1, 6, 25, 93, 324, 1088, 3565, 11487};
        for (int n = 1; n <= 20; ++n) {
            require(s_total(n) == central_trinomial(n) + 2 * central_trinomial(n - 1) -
                                      motzkin_number(n - 1),
                    "s(n) closed form at n=" + std::to_string(n));
            require(2 * u_total(n) == int_pow(3, (unsigned)n) - central_trinomial(n),
                    "u(n) closed form at n=" + std::to_string(n));
            require(int_total(n) == (int_pow(3, (unsigned)n) - 3 * central_trinomial(n)) / 2 -
                                        2 * central_trinomial(n - 1) +
                                        2 * motzkin_number(n - 1),
                    "int(n) closed form at n=" + std::to_string(n));
            require(2 * u_total(n) + central_trinomial(n) == int_pow(3, (unsigned)n),
                    "2u + T = 3^n at n=" + std::to_string(n));
            require(u_total(n) == int_total(n) + s_total(n) - motzkin_number(n - 1),
                    "u = int + s - m at n=" + std::to_string(n));
        }
        for (int n = 1; n <= 10; ++n) {
            require(s_total(n) == s_ref[(std::size_t)n - 1], "s list at n=" + std::to_string(n));
            require(u_total(n) == u_ref[(std::size_t)n - 1], "u list at n=" + std::to_string(n));
            require(int_total(n) == int_ref[(std::size_t)n - 1],
                    "int list at n=" + std::to_string(n));
        }
    }});

    criteria.push_back({"8. triangles reproduce the printed arrays", [] {
        StatTable s = s_table(6), u = u_table(6), h = h_table(20);
        const std::vector<std::vector<BigInt>> s_rows = {
            {2}, {0, 4}, {5, 0, 6}, {7, 14, 0, 8}, {25, 18, 27, 0, 10}, {61, 72, 33, 44, 0, 12}};
        const std::vector<std::vector<BigInt>> u_rows = {
            {1}, {0, 3}, {4, 0, 6}, {7, 14, 0, 10}, {27, 21, 33, 0, 15}, {75, 89, 45, 64, 0, 21}};
        for (int n = 1; n <= 6; ++n) {
            require(s.row(n, 1, n) == s_rows[(std::size_t)n - 1],
                    "s row " + std::to_string(n));
            require(u.row(n, 1, n) == u_rows[(std::size_t)n - 1],
                    "u row " + std::to_string(n));
        }
        require(h.row(5, 1, 5) == std::vector<BigInt>{45, 30, 15, 5, 1}, "h row 5");
        for (int n = 1; n <= 20; ++n)
            for (int i = 0; i < n; ++i)
                require(h.at(n, n - i) == trinomial(n, i),
                        "h(n,n-i) = T(n,i) at n=" + std::to_string(n) + " i=" + std::to_string(i));
        const std::vector<BigInt> row8 = {1, 8, 36, 112, 266, 504, 784, 1016};
        for (std::size_t i = 0; i < row8.size(); ++i)
            require(trinomial(8, (int)i) == row8[i], "trinomial row 8");
    }});

    criteria.push_back({"9. bijections: goldens, round trips, transport for n <= 12", [] {
        require(psi(MotzkinWord::parse("12123453412")).str() == "UDUFUFDFDF", "psi golden");
        require(phi(RestrictedCatalanWord::parse("1123231231")).str() == "12323123121",
                "phi golden");
        for (int n = 1; n <= 12; ++n) {
            auto words = generate_all(n);
            std::set<std::string> psi_im, luka_im, dyck_im;
            for (const auto& w : words) {
                LatticePath pm = psi(w);
                require(psi_inv(pm) == w, "psi round trip " + w.str());
                require(stats(w).sper == 2LL * n - up_steps(pm),
                        "transport fails for " + w.str());
                psi_im.insert(pm.str());
                LatticePath pl = to_lukasiewicz(w);
                require(from_lukasiewicz(pl) == w, "lukasiewicz round trip " + w.str());
                luka_im.insert(pl.str());
                LatticePath pd = to_dyck_udu(w);
                require(from_dyck_udu(pd) == w, "dyck round trip " + w.str());
                dyck_im.insert(pd.str());
            }
            require(psi_im.size() == words.size() && luka_im.size() == words.size() &&
                        dyck_im.size() == words.size(),
                    "injectivity at n=" + std::to_string(n));
            if (n >= 2) {
                std::set<std::string> phi_im;
                for (const auto& c : generate_catalan_avoiding(n - 1))
                    phi_im.insert(phi(c).str());
                require(phi_im.size() == words.size(),
                        "phi bijectivity at n=" + std::to_string(n));
            }
        }
    }});

    criteria.push_back({"10. per-word Pick identity for n <= 12", [] {
        for (int n = 1; n <= 12; ++n)
            for (const auto& w : generate_all(n)) {
                PolyominoStats st = stats(w);
                require(st.area == st.inter + st.sper - 1, "Pick fails for " + w.str());
            }
    }});

    criteria.push_back({"11. asymptotic ratios behave at n = 20 and 60", [] {
        for (const std::string name : {"gn", "sn", "un", "intn"}) {
            double r20 = asymptotic(name, 20).ratio;
            double r60 = asymptotic(name, 60).ratio;
            require(r60 > 0.5 && r60 < 1.5,
                    name + " ratio at 60 is " + str_of(r60));
            require(std::abs(r60 - 1.0) < std::abs(r20 - 1.0),
                    name + " ratio is not closer to 1 at 60 (" + str_of(r20) + " -> " +
                        str_of(r60) + ")");
        }
        double es = asymptotic("expected_sper", 60).ratio;
        require(std::abs(es - 1.0) < 0.05, "expected sper off by " + str_of(es - 1.0));
    }});

    criteria.push_back({"12. verify suite at n_max = 12 exits clean within 120 s", [] {
        auto start = std::chrono::steady_clock::now();
        CheckReport report = run_suite(12);
        double elapsed = seconds_since(start);
        for (const auto& c : report.checks)
            require(c.pass, "check '" + c.name + "' failed" +
                                (c.first_discrepancy
                                     ? " at " + c.first_discrepancy->location + " (expected " +
                                           c.first_discrepancy->expected + ", got " +
                                           c.first_discrepancy->actual + ")"
                                     : ""));
        require(elapsed < 120.0, "took " + str_of(elapsed) + " s");
    }});

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.body();
            std::cout << "[PASS] " << criterion.label << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << criterion.label << " -- " << e.what() << '\n';
        }
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
