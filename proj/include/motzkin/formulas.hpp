#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/numeric.hpp"

namespace motzkin {

/// Motzkin number m_n by the integer-only convolution recurrence
/// m_{n+1} = m_n + sum_k m_k m_{n-1-k}.
BigInt motzkin_number(int n);

/// m_n by the binomial sum (1/(n+1)) sum_i C(n+1,i) C(n+1-i,i+1);
/// independent route, agrees with motzkin_number.
BigInt motzkin_binomial(int n);

/// Number of Motzkin words of length n ending with k, by the alternating
/// binomial sum (exact rational intermediates, integral result).
BigInt m_nk(int n, int k);

/// Coefficient of x^i in (1+x+x^2)^n; zero outside 0 <= i <= 2n.
BigInt trinomial(int n, int i);
BigInt central_trinomial(int n);  // T_n = trinomial(n, n)

BigInt s_total(int n);        // total semiperimeter:  T_n + 2T_{n-1} - m_{n-1}
BigInt u_total(int n);        // total area:           (3^n - T_n) / 2
BigInt int_total(int n);      // total interior points (0 for n < 3)
BigInt lastsym_total(int n);  // total last symbol:    m_n

/// Exact integer triangle/sequence with provenance label. Lookups outside
/// the stored support return 0.
struct StatTable {
    std::string name;
    int n_max = 0;
    std::map<std::pair<int, int>, BigInt> values;

    BigInt at(int n, int i) const;
    void set(int n, int i, BigInt value);
    /// Values (n, i_min..i_max) as a dense row.
    std::vector<BigInt> row(int n, int i_min, int i_max) const;
    BigInt row_sum(int n) const;
};

/// s(n,i): total semiperimeter of length-n words ending with i. Rows 1 and 2
/// from enumeration, then the direct recurrence for i in {1, 2, n} and the
/// difference-form recurrence for 3 <= i <= n-1.
StatTable s_table(int n_max);

/// u(n,i): total area of length-n words ending with i; filled like s_table.
StatTable u_table(int n_max);

/// h(n,i): cells at level i over all length-n words, via
/// h(n,i) = h(n-1,i-1) + h(n-1,i) + h(n-1,i+1) with h(n,1) = n m_{n-1}.
StatTable h_table(int n_max);

/// g(n,i): Motzkin walks of length n ending at height i (negative heights
/// included); g(n,i) = h(n,i) for 1 <= i <= n.
StatTable walks(int n_max);

/// m(n,k) triangle from the binomial formula, 1 <= k <= n.
StatTable m_table(int n_max);

/// T(n,i) for 0 <= i <= 2n.
StatTable trinomial_table(int n_max);

struct AsymptoticPoint {
    double exact = 0;
    double asymptotic = 0;
    double ratio = 0;
};

/// Exact value vs the stated asymptotic formula. Names: gn, sn, un, intn,
/// expected_last, expected_sper, expected_inter (dashes accepted for
/// underscores). Floats appear only here.
AsymptoticPoint asymptotic(const std::string& name, int n);

extern const std::vector<std::string> kAsymptoticNames;

}  // namespace motzkin
