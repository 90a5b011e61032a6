#pragma once

#include <optional>
#include <string>

#include "motzkin/series.hpp"
#include "motzkin/word.hpp"

namespace motzkin {

// Exact truncated expansions of the named generating functions. `order` is
// the inclusive x-degree. q-carrying builders work in a q-capped ring; the
// default cap order*(order+1)/2 is the maximal area at that length, so no
// retained coefficient is ever affected by the cap.

/// M(x) = (1 - x - sqrt(1-2x-3x^2)) / (2x^2), the Motzkin numbers.
TruncSeries motzkin_gf(int order, AuxCaps caps = AuxCaps::none());

/// T(x) = 1/sqrt(1-2x-3x^2), the central trinomial coefficients.
TruncSeries trinomial_gf(int order);

/// S(x,p): nonempty words by length and semiperimeter.
TruncSeries S_xp(int order);

/// A(x;p,1;v): length, semiperimeter, last symbol (v marks last-1).
TruncSeries A_xpv(int order);

/// A(x;1,1;v)*v: length and last symbol (v marks the last symbol itself).
TruncSeries A_xv_lastsymbol(int order);

/// Total last symbol g_n = m_n.
TruncSeries lastsym_total_gf(int order);

/// Total semiperimeter s(n).
TruncSeries total_sper_gf(int order);

/// Total area u(n) = (1/2)(1/(1-3x) - T(x)).
TruncSeries total_area_gf(int order);

/// U(x,q): nonempty words by length and area (alternating q-series).
TruncSeries U_xq(int order, int q_cap = -1);

/// H(x,q): nonempty words by length and interior points.
TruncSeries H_interior_xq(int order, int q_cap = -1);

/// Total interior points int(n).
TruncSeries total_inter_gf(int order);

/// B_i(x) = x^i M(x)^i / (1 - x - 2x^2 M(x)); coefficient of x^n is h(n,i).
TruncSeries B_i_gf(int i, int order);

/// H_i(x,q): words by length and number of cells at level i.
/// H_1 = 1 + qx M(xq); H_i = (1+x) / (1 - x (H_{i-1} - 1)) for i >= 2.
TruncSeries H_i_xq(int i, int order, int q_cap = -1);

/// Continued-fraction expansion of 1 + U(x,q), truncated at depth order+2.
TruncSeries continued_fraction_xq(int order, int q_cap = -1);

/// Brute-force sum over all words of length <= order of
/// x^n p^sper q^area v^{last-1}; uncapped and exact.
TruncSeries brute_gf(int order, const EnumLimits& limits = {});

/// Brute-force sum of x^n q^inter v^{last-1}.
TruncSeries brute_inter_gf(int order, const EnumLimits& limits = {});

struct EquationReport {
    std::string name;
    bool zero = false;
    std::string first_residual;  // "x^n: poly" when nonzero
};

/// Check a functional equation against a (possibly perturbed) brute series.
/// The brute argument must be the uncapped brute_gf / brute_inter_gf at the
/// order to verify.
EquationReport check_eqA3(const TruncSeries& brute);
EquationReport check_interior_equation(const TruncSeries& brute_inter);

/// name is "eqA3" or "interior"; builds the brute series at `order` itself.
EquationReport check_functional_equation(const std::string& name, int order = 10);

std::string series_to_json(const TruncSeries& s);

}  // namespace motzkin
