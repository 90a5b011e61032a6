#include <doctest.h>

#include <cmath>

#include "motzkin/formulas.hpp"
#include "motzkin/word.hpp"

using namespace motzkin;

TEST_CASE("motzkin numbers") {
    std::vector<BigInt> expected = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(motzkin_number((int)n) == expected[n]);
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(motzkin_number(n) == motzkin_binomial(n));
    }
}

TEST_CASE("m(n,k) values and identities") {
    CHECK(m_nk(5, 3) == 3);
    CHECK(m_nk(4, 2) == 2);
    CHECK(m_nk(1, 1) == 1);
    CHECK(m_nk(5, 4) == 0);

    for (int n = 1; n <= 14; ++n) {
        BigInt row_sum = 0;
        for (int k = 1; k <= n; ++k) row_sum += m_nk(n, k);
        CHECK(row_sum == motzkin_number(n - 1));
    }
    // the last-symbol identity: sum_k k m(n,k) = m_n, i.e. appending a letter
    // to each word of length n constructs every word of length n+1 exactly once
    for (int n = 1; n <= 20; ++n) {
        BigInt weighted = 0;
        for (int k = 1; k <= n; ++k) weighted += k * m_nk(n, k);
        CAPTURE(n);
        CHECK(weighted == motzkin_number(n));
    }
    // equivalently the sum equals |M_{n+1}|
    for (int n : {4, 7}) {
        BigInt weighted = 0;
        for (int k = 1; k <= n; ++k) weighted += k * m_nk(n, k);
        CHECK(weighted == BigInt(generate_all(n + 1).size()));
    }
}

TEST_CASE("trinomial coefficients") {
    std::vector<BigInt> row8 = {1, 8, 36, 112, 266, 504, 784, 1016};
    for (std::size_t i = 0; i < row8.size(); ++i) CHECK(trinomial(8, (int)i) == row8[i]);
    CHECK(trinomial(5, 4) == 45);
    std::vector<BigInt> central = {1, 1, 3, 7, 19};
    for (std::size_t n = 0; n < central.size(); ++n)
        CHECK(central_trinomial((int)n) == central[n]);
    CHECK(trinomial(4, -1) == 0);
    CHECK(trinomial(4, 9) == 0);

    for (int n = 0; n <= 20; ++n) {
        BigInt row_sum = 0;
        for (int i = 0; i <= 2 * n; ++i) {
            row_sum += trinomial(n, i);
            CHECK(trinomial(n, i) == trinomial(n, 2 * n - i));  // palindromy
        }
        CHECK(row_sum == int_pow(3, (unsigned)n));
    }
}

TEST_CASE("closed-form totals match the reference sequences") {
    std::vector<BigInt> s_expected = {2, 4, 11, 29, 80, 222, 624, 1766, 5030, 14396};
    std::vector<BigInt> u_expected = {1, 3, 10, 31, 96, 294, 897, 2727, 8272, 25048};
    std::vector<BigInt> int_expected = {0, 0, 1, 6, 25, 93, 324, 1088, 3565, 11487};
    std::vector<BigInt> g_expected = {1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(s_total(n) == s_expected[(std::size_t)n - 1]);
        CHECK(u_total(n) == u_expected[(std::size_t)n - 1]);
        CHECK(int_total(n) == int_expected[(std::size_t)n - 1]);
        CHECK(lastsym_total(n) == g_expected[(std::size_t)n - 1]);
    }
}

TEST_CASE("aggregate identities for n <= 20") {
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        // twice the total area plus the central trinomial coefficient is 3^n
        CHECK(2 * u_total(n) + central_trinomial(n) == int_pow(3, (unsigned)n));
        CHECK(u_total(n) == int_total(n) + s_total(n) - motzkin_number(n - 1));
        CHECK(s_total(n) ==
              central_trinomial(n) + 2 * central_trinomial(n - 1) - motzkin_number(n - 1));
    }
}

TEST_CASE("totals against exhaustive enumeration") {
    for (int n = 1; n <= 10; ++n) {
        BigInt s_sum = 0, u_sum = 0, int_sum = 0, g_sum = 0;
        for (const auto& w : generate_all(n)) {
            PolyominoStats st = stats_formula(w);
            s_sum += st.sper;
            u_sum += st.area;
            int_sum += st.inter;
            g_sum += st.last;
        }
        CAPTURE(n);
        CHECK(s_sum == s_total(n));
        CHECK(u_sum == u_total(n));
        CHECK(int_sum == int_total(n));
        CHECK(g_sum == lastsym_total(n));
    }
}

TEST_CASE("s and u tables reproduce the printed arrays") {
    StatTable s = s_table(6);
    std::vector<std::vector<BigInt>> s_rows = {{2},
                                               {0, 4},
                                               {5, 0, 6},
                                               {7, 14, 0, 8},
                                               {25, 18, 27, 0, 10},
                                               {61, 72, 33, 44, 0, 12}};
    for (int n = 1; n <= 6; ++n) CHECK(s.row(n, 1, n) == s_rows[(std::size_t)n - 1]);

    StatTable u = u_table(6);
    std::vector<std::vector<BigInt>> u_rows = {{1},
                                               {0, 3},
                                               {4, 0, 6},
                                               {7, 14, 0, 10},
                                               {27, 21, 33, 0, 15},
                                               {75, 89, 45, 64, 0, 21}};
    for (int n = 1; n <= 6; ++n) CHECK(u.row(n, 1, n) == u_rows[(std::size_t)n - 1]);

    CHECK(u.row_sum(5) == u_total(5));
    CHECK(u.row_sum(5) == 96);
}

TEST_CASE("tables match enumeration cell by cell") {
    int n_max = 10;
    StatTable s = s_table(n_max), u = u_table(n_max);
    for (int n = 1; n <= n_max; ++n) {
        std::map<int, BigInt> s_enum, u_enum;
        for (const auto& w : generate_all(n)) {
            PolyominoStats st = stats_formula(w);
            s_enum[st.last] += st.sper;
            u_enum[st.last] += st.area;
        }
        for (int i = 1; i <= n; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            CHECK(s.at(n, i) == (s_enum.count(i) ? s_enum[i] : BigInt(0)));
            CHECK(u.at(n, i) == (u_enum.count(i) ? u_enum[i] : BigInt(0)));
        }
        CHECK(s.row_sum(n) == s_total(n));
        CHECK(u.row_sum(n) == u_total(n));
    }
}

TEST_CASE("difference-form recurrences agree with the direct ones") {
    int n_max = 12;
    StatTable s = s_table(n_max), u = u_table(n_max), m = m_table(n_max - 1);
    for (int n = 2; n <= n_max; ++n)
        for (int i = 3; i <= n - 1; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            BigInt s_diff = s.at(n, i - 1) + s.at(n - 1, i - 1) - s.at(n - 1, i - 2) -
                            s.at(n - 1, i) + 2 * (m.at(n - 1, i - 1) - m.at(n - 1, i - 2)) -
                            m.at(n - 1, i);
            CHECK(s.at(n, i) == s_diff);
            BigInt u_diff = u.at(n, i - 1) + u.at(n - 1, i - 1) - u.at(n - 1, i) -
                            u.at(n - 1, i - 2) + i * m.at(n - 1, i - 1) -
                            (i - 1) * m.at(n - 1, i - 2) - i * m.at(n - 1, i);
            for (int j = i; j <= n - 1; ++j) u_diff += m.at(n - 1, j);
            CHECK(u.at(n, i) == u_diff);
        }
}

TEST_CASE("height table and walks") {
    StatTable h = h_table(20);
    CHECK(h.row(5, 1, 5) == std::vector<BigInt>{45, 30, 15, 5, 1});
    std::vector<BigInt> h1 = {1, 2, 6, 16, 45, 126};
    for (int n = 1; n <= 6; ++n) {
        CHECK(h.at(n, 1) == h1[(std::size_t)n - 1]);
        CHECK(h.at(n, 1) == n * motzkin_number(n - 1));
    }
    // h vanishes above the diagonal
    CHECK(h.at(4, 5) == 0);

    StatTable g = walks(12);
    CHECK(g.at(5, 2) == 30);
    CHECK(g.at(0, 0) == 1);
    for (int n = 1; n <= 12; ++n)
        for (int i = 1; i <= n; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            CHECK(g.at(n, i) == h.at(n, i));
        }
    // walks are symmetric in the ending height
    for (int n = 1; n <= 12; ++n)
        for (int i = 1; i <= n; ++i) CHECK(g.at(n, i) == g.at(n, -i));

    // h(n, n-i) = T(n, i)
    for (int n = 1; n <= 20; ++n)
        for (int i = 0; i < n; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            CHECK(h.at(n, n - i) == trinomial(n, i));
        }

    // row sums equal the total area
    for (int n = 1; n <= 12; ++n) CHECK(h.row_sum(n) == u_total(n));
}

TEST_CASE("height table against enumeration") {
    StatTable h = h_table(9);
    for (int n = 1; n <= 9; ++n) {
        std::map<int, BigInt> by_level;
        for (const auto& w : generate_all(n))
            for (const auto& [level, count] : height_histogram(w)) by_level[level] += count;
        for (int i = 1; i <= n; ++i) CHECK(h.at(n, i) == by_level[i]);
    }
}

TEST_CASE("asymptotic evaluations") {
    AsymptoticPoint gn = asymptotic("gn", 10);
    CHECK(gn.exact == doctest::Approx(2188.0));

    AsymptoticPoint un = asymptotic("un", 10);
    CHECK(un.exact == doctest::Approx(25048.0));
    CHECK(un.asymptotic == doctest::Approx(29524.5));
    CHECK(un.ratio == doctest::Approx(0.8484).epsilon(1e-3));

    AsymptoticPoint es = asymptotic("expected_sper", 30);
    CHECK(es.asymptotic == doctest::Approx(50.0));
    CHECK(es.ratio == doctest::Approx(1.0116).epsilon(1e-3));
    CHECK(asymptotic("expected-sper", 30).ratio == es.ratio);

    CHECK_THROWS_AS(asymptotic("bogus", 10), Error);
    CHECK_THROWS_AS(asymptotic("gn", 2), Error);
}

TEST_CASE("asymptotic deviation shrinks along n = 20, 30, 40, 60") {
    for (const auto& name : kAsymptoticNames) {
        double prev = -1;
        for (int n : {20, 30, 40, 60}) {
            double dev = std::abs(asymptotic(name, n).ratio - 1.0);
            CAPTURE(name);
            CAPTURE(n);
            if (prev >= 0) CHECK(dev < prev);
            prev = dev;
        }
    }
}

TEST_CASE("stat table lookups outside bounds are zero") {
    StatTable s = s_table(4);
    CHECK(s.at(0, 1) == 0);
    CHECK(s.at(3, 7) == 0);
    CHECK(s.at(-2, 1) == 0);
}
