#include "motzkin/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "motzkin/errors.hpp"
#include "motzkin/word.hpp"

namespace motzkin {

BigInt motzkin_number(int n) {
    if (n < 0) throw Error("motzkin_number: negative index");
    // m_{k+1} = m_k + sum_{j=0}^{k-1} m_j m_{k-1-j}
    std::vector<BigInt> m{1, 1};
    for (int k = 1; k <= n; ++k) {
        BigInt next = m[static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j)
            next += m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k - 1 - j)];
        m.push_back(next);
    }
    return m[static_cast<std::size_t>(n)];
}

BigInt motzkin_binomial(int n) {
    if (n < 0) throw Error("motzkin_binomial: negative index");
    BigInt sum = 0;
    for (long long i = 0;; ++i) {
        BigInt term = binomial(n + 1, i) * binomial(n + 1 - i, i + 1);
        if (term == 0 && 2 * i > n) break;
        sum += term;
    }
    // the 1/(n+1) prefactor divides the sum exactly
    BigInt q = sum / (n + 1);
    if (q * (n + 1) != sum) throw Error("motzkin_binomial: non-integral result");
    return q;
}

BigInt m_nk(int n, int k) {
    if (k < 1 || k > n) return 0;
    BigInt sum = 0;  // sum_{j=k}^n (-1)^{n-j} C(n,j) C(2j-k-1, j-1)
    for (int j = k; j <= n; ++j) {
        BigInt term = binomial(n, j) * binomial(2LL * j - k - 1, j - 1);
        sum += ((n - j) % 2 == 0) ? term : -term;
    }
    Rat value = Rat(k) * sum / n;
    return to_integer(value);  // the k/n prefactor always cancels
}

namespace {

std::vector<BigInt> trinomial_row(int n) {
    std::vector<BigInt> row{1};
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(row.size() + 2);
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
            next[i + 2] += row[i];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

BigInt trinomial(int n, int i) {
    if (n < 0 || i < 0 || i > 2 * n) return 0;
    return trinomial_row(n)[static_cast<std::size_t>(i)];
}

BigInt central_trinomial(int n) { return trinomial(n, n); }

BigInt s_total(int n) {
    if (n < 1) throw Error("s_total: n >= 1 required");
    return central_trinomial(n) + 2 * central_trinomial(n - 1) - motzkin_number(n - 1);
}

BigInt u_total(int n) {
    if (n < 1) throw Error("u_total: n >= 1 required");
    BigInt diff = int_pow(3, static_cast<unsigned>(n)) - central_trinomial(n);
    return diff / 2;  // 3^n and T_n have the same parity
}

BigInt int_total(int n) {
    if (n < 1) throw Error("int_total: n >= 1 required");
    BigInt value = (int_pow(3, static_cast<unsigned>(n)) - 3 * central_trinomial(n)) / 2 -
                   2 * central_trinomial(n - 1) + 2 * motzkin_number(n - 1);
    return value;  // evaluates to 0 for n = 1, 2
}

BigInt lastsym_total(int n) {
    if (n < 1) throw Error("lastsym_total: n >= 1 required");
    return motzkin_number(n);
}

BigInt StatTable::at(int n, int i) const {
    auto it = values.find({n, i});
    return it == values.end() ? BigInt(0) : it->second;
}

void StatTable::set(int n, int i, BigInt value) {
    if (value != 0) values[{n, i}] = std::move(value);
}

std::vector<BigInt> StatTable::row(int n, int i_min, int i_max) const {
    std::vector<BigInt> out;
    for (int i = i_min; i <= i_max; ++i) out.push_back(at(n, i));
    return out;
}

BigInt StatTable::row_sum(int n) const {
    BigInt sum = 0;
    auto lo = values.lower_bound({n, std::numeric_limits<int>::min()});
    for (auto it = lo; it != values.end() && it->first.first == n; ++it) sum += it->second;
    return sum;
}

namespace {

// Shared skeleton of s_table / u_table. Rows 1 and 2 come from enumeration so
// the recurrences are tested against independent data; `direct` and `diff`
// are the two recurrence forms, applied on the ranges the text supports.
template <typename Stat, typename Direct, typename Diff, typename Col1>
StatTable fill_last_symbol_table(const std::string& name, int n_max, Stat&& stat, Direct&& direct,
                                 Diff&& diff, Col1&& col1) {
    StatTable t;
    t.name = name;
    t.n_max = n_max;
    for (int n = 1; n <= std::min(2, n_max); ++n)
        for (const auto& w : generate_all(n)) {
            auto key = std::pair{n, w.last()};
            t.values[key] += stat(w);
        }
    for (int n = 3; n <= n_max; ++n) {
        t.set(n, 1, col1(t, n));
        for (int i = 2; i <= n; ++i) {
            bool use_diff = i >= 3 && i <= n - 1;
            t.set(n, i, use_diff ? diff(t, n, i) : direct(t, n, i));
        }
    }
    return t;
}

}  // namespace

StatTable s_table(int n_max) {
    if (n_max < 1) throw Error("s_table: n_max >= 1 required");
    StatTable m = m_table(std::max(1, n_max - 1));
    auto direct = [&](const StatTable& t, int n, int i) {
        BigInt sum = t.at(n - 1, i - 1) + 2 * m.at(n - 1, i - 1);
        for (int j = i + 1; j <= n - 1; ++j) sum += t.at(n - 1, j) + m.at(n - 1, j);
        return sum;
    };
    auto diff = [&](const StatTable& t, int n, int i) {
        return t.at(n, i - 1) + t.at(n - 1, i - 1) - t.at(n - 1, i - 2) - t.at(n - 1, i) +
               2 * (m.at(n - 1, i - 1) - m.at(n - 1, i - 2)) - m.at(n - 1, i);
    };
    auto col1 = [&](const StatTable& t, int n) {
        // appending a height-1 column to any word ending at j >= 2 adds 1 to sper
        BigInt sum = 0;
        for (int j = 2; j <= n - 1; ++j) sum += t.at(n - 1, j) + m.at(n - 1, j);
        return sum;
    };
    return fill_last_symbol_table(
        "s", n_max, [](const MotzkinWord& w) { return BigInt(stats_formula(w).sper); }, direct,
        diff, col1);
}

StatTable u_table(int n_max) {
    if (n_max < 1) throw Error("u_table: n_max >= 1 required");
    StatTable m = m_table(std::max(1, n_max - 1));
    auto direct = [&](const StatTable& t, int n, int i) {
        BigInt sum = t.at(n - 1, i - 1) + i * m.at(n - 1, i - 1);
        for (int j = i + 1; j <= n - 1; ++j) sum += t.at(n - 1, j) + i * m.at(n - 1, j);
        return sum;
    };
    auto diff = [&](const StatTable& t, int n, int i) {
        BigInt sum = t.at(n, i - 1) + t.at(n - 1, i - 1) - t.at(n - 1, i) - t.at(n - 1, i - 2) +
                     i * m.at(n - 1, i - 1) - (i - 1) * m.at(n - 1, i - 2) - i * m.at(n - 1, i);
        for (int j = i; j <= n - 1; ++j) sum += m.at(n - 1, j);
        return sum;
    };
    auto col1 = [&](const StatTable& t, int n) {
        BigInt sum = 0;
        for (int j = 2; j <= n - 1; ++j) sum += t.at(n - 1, j) + m.at(n - 1, j);
        return sum;
    };
    return fill_last_symbol_table(
        "u", n_max, [](const MotzkinWord& w) { return BigInt(stats_formula(w).area); }, direct,
        diff, col1);
}

StatTable h_table(int n_max) {
    StatTable t;
    t.name = "h";
    t.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        t.set(n, 1, BigInt(n) * motzkin_number(n - 1));
        for (int i = 2; i <= n; ++i)
            t.set(n, i, t.at(n - 1, i - 1) + t.at(n - 1, i) + t.at(n - 1, i + 1));
    }
    return t;
}

StatTable walks(int n_max) {
    StatTable t;
    t.name = "walks";
    t.n_max = n_max;
    t.set(0, 0, 1);
    for (int n = 1; n <= n_max; ++n)
        for (int i = -n; i <= n; ++i)
            t.set(n, i, t.at(n - 1, i - 1) + t.at(n - 1, i) + t.at(n - 1, i + 1));
    return t;
}

StatTable m_table(int n_max) {
    StatTable t;
    t.name = "m";
    t.n_max = n_max;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) t.set(n, k, m_nk(n, k));
    return t;
}

StatTable trinomial_table(int n_max) {
    StatTable t;
    t.name = "T";
    t.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        auto row = trinomial_row(n);
        for (int i = 0; i <= 2 * n; ++i) t.set(n, i, row[static_cast<std::size_t>(i)]);
    }
    return t;
}

const std::vector<std::string> kAsymptoticNames = {
    "gn", "sn", "un", "intn", "expected_last", "expected_sper", "expected_inter"};

AsymptoticPoint asymptotic(const std::string& raw_name, int n) {
    if (n < 3) throw Error("asymptotic: n >= 3 required");
    std::string name = raw_name;
    std::replace(name.begin(), name.end(), '-', '_');

    const double pi = std::numbers::pi;
    const double s3 = std::sqrt(3.0);
    auto dbl = [](const BigInt& v) { return v.convert_to<double>(); };
    double pow3n = std::pow(3.0, n);

    AsymptoticPoint pt;
    if (name == "gn") {
        pt.exact = dbl(lastsym_total(n));
        pt.asymptotic = 3.0 * s3 * std::pow(1.0 / n, 1.5) * pow3n / (2.0 * std::sqrt(pi));
    } else if (name == "sn") {
        pt.exact = dbl(s_total(n));
        pt.asymptotic = 5.0 * s3 * std::sqrt(1.0 / n) * pow3n / (6.0 * std::sqrt(pi));
    } else if (name == "un") {
        pt.exact = dbl(u_total(n));
        pt.asymptotic = pow3n / 2.0;
    } else if (name == "intn") {
        pt.exact = dbl(int_total(n));
        pt.asymptotic = pow3n / 2.0;
    } else if (name == "expected_last") {
        pt.exact = dbl(motzkin_number(n)) / dbl(motzkin_number(n - 1));
        pt.asymptotic = 3.0;
    } else if (name == "expected_sper") {
        pt.exact = dbl(s_total(n)) / dbl(motzkin_number(n - 1));
        pt.asymptotic = 5.0 * n / 3.0;
    } else if (name == "expected_inter") {
        pt.exact = dbl(int_total(n)) / dbl(motzkin_number(n - 1));
        pt.asymptotic = std::sqrt(pi / 3.0) * std::pow(n, 1.5);
    } else {
        throw Error("unknown asymptotic name '" + raw_name + "'");
    }
    pt.ratio = pt.exact / pt.asymptotic;
    return pt;
}

}  // namespace motzkin
