#include "motzkin/builders.hpp"

#include <sstream>

#include "motzkin/formulas.hpp"

namespace motzkin {

namespace {

int default_q_cap(int order, int q_cap) { return q_cap >= 0 ? q_cap : order * (order + 1) / 2; }

/// sqrt(1 - 2x - 3x^2), the radical shared by most closed forms.
TruncSeries radical(int order, AuxCaps caps = AuxCaps::none()) {
    return sqrt_unit(make_series({{0, 1}, {1, -2}, {2, -3}}, order, caps));
}

}  // namespace

TruncSeries motzkin_gf(int order, AuxCaps caps) {
    TruncSeries num = make_series({{0, 1}, {1, -1}}, order + 2, caps) - radical(order + 2, caps);
    return shift_div_x(num, 2).scaled(Rat(1, 2));
}

TruncSeries trinomial_gf(int order) {
    return div_unit(TruncSeries::constant(1, order), radical(order));
}

TruncSeries S_xp(int order) {
    // sqrt(1 - 2p^2 x - 4p^3 x^2 + p^4 x^2)
    TruncSeries rad = sqrt_unit(
        make_series({{0, 1}, {1, -2, 2}, {2, -4, 3}, {2, 1, 4}}, order + 1));
    TruncSeries num = make_series({{0, 1}, {1, -1, 2}}, order + 1) - rad;
    return div_var(shift_div_x(num, 1), Var::p, 1).scaled(Rat(1, 2));
}

TruncSeries A_xpv(int order) {
    AuxCaps caps = AuxCaps::of(-1, -1, order);  // v marks last-1, degree < n
    TruncSeries rad = sqrt_unit(
        make_series({{0, 1}, {1, -2, 2}, {2, -4, 3}, {2, 1, 4}}, order, caps));
    TruncSeries num =
        make_series({{0, 1}, {1, 1, 2}, {1, -2, 2, 0, 1}}, order, caps) - rad;
    TruncSeries den = make_series(
        {{0, 2}, {0, -2, 0, 0, 1}, {1, 2, 1}, {1, 2, 2, 0, 2}, {1, -2, 2, 0, 1}}, order, caps);
    return div_unit(num, den);
}

TruncSeries A_xv_lastsymbol(int order) {
    AuxCaps caps = AuxCaps::of(-1, -1, order);  // v marks the last symbol, degree <= n
    TruncSeries m = motzkin_gf(order, caps);
    TruncSeries num = make_series({{1, 1, 0, 0, 1}, {1, -1, 0, 0, 2}}, order, caps) +
                      make_series({{2, 1, 0, 0, 1}}, order, caps) * m;
    TruncSeries den = make_series(
        {{0, 1}, {0, -1, 0, 0, 1}, {1, 1}, {1, -1, 0, 0, 1}, {1, 1, 0, 0, 2}}, order, caps);
    return div_unit(num, den);
}

TruncSeries lastsym_total_gf(int order) {
    TruncSeries num =
        make_series({{0, 1}, {1, -1}, {2, -2}}, order + 2) - radical(order + 2);
    return shift_div_x(num, 2).scaled(Rat(1, 2));
}

TruncSeries total_sper_gf(int order) {
    TruncSeries rad = radical(order + 1);
    TruncSeries num = make_series({{0, 1}, {2, 1}}, order + 1) -
                      make_series({{0, 1}, {1, 1}}, order + 1) * rad;
    return div_unit(shift_div_x(num, 1), rad.scaled(2));
}

TruncSeries total_area_gf(int order) {
    TruncSeries geo = div_unit(TruncSeries::constant(1, order),
                               make_series({{0, 1}, {1, -3}}, order));
    return (geo - trinomial_gf(order)).scaled(Rat(1, 2));
}

TruncSeries U_xq(int order, int q_cap) {
    AuxCaps caps = AuxCaps::of(-1, default_q_cap(order, q_cap), -1);
    TruncSeries num(order, caps), den(order, caps);
    SparsePoly prod = SparsePoly::constant(1);  // prod_{i=1}^{j-1} (1-q^i+q^{2i})/(1-q^i)
    for (int j = 1; j <= order; ++j) {
        if (j > 1) {
            int i = j - 1;
            SparsePoly factor = SparsePoly::constant(1) - SparsePoly::monomial(1, 0, i, 0) +
                                SparsePoly::monomial(1, 0, 2 * i, 0);
            prod = mul(mul(prod, factor, caps), geometric_inverse_q(i, caps), caps);
        }
        SparsePoly term = mul(SparsePoly::monomial(j % 2 ? 1 : -1, 0, j, 0), prod, caps);
        num.at(j) = term;
        den.at(j) = mul(term, geometric_inverse_q(j, caps), caps);
    }
    return div_unit(num, TruncSeries::constant(1, order, caps) - den);
}

TruncSeries H_interior_xq(int order, int q_cap) {
    AuxCaps caps = AuxCaps::of(-1, default_q_cap(order, q_cap), -1);
    TruncSeries num(order, caps), den(order, caps);
    SparsePoly prod = SparsePoly::constant(1);  // prod_{i=1}^{j-1} (q^{i-1} - 1/(1-q^i))
    for (int j = 1; j <= order; ++j) {
        if (j > 1) {
            int i = j - 1;
            SparsePoly factor =
                SparsePoly::monomial(1, 0, i - 1, 0) - geometric_inverse_q(i, caps);
            prod = mul(prod, factor, caps);
        }
        num.at(j) = prod;
        den.at(j) = mul(prod, geometric_inverse_q(j, caps), caps);
    }
    return div_unit(num, TruncSeries::constant(1, order, caps) - den);
}

TruncSeries total_inter_gf(int order) {
    TruncSeries rad = radical(order + 1);
    TruncSeries num = make_series({{0, 2}, {1, -3}, {2, -5}}, order + 1) -
                      make_series({{0, 2}, {1, -1}, {2, -2}}, order + 1) * rad;
    // 2x(1+x)(1-3x) = 2x(1 - 2x - 3x^2)
    TruncSeries den = make_series({{0, 2}, {1, -4}, {2, -6}}, order + 1);
    return div_unit(shift_div_x(num, 1), den);
}

TruncSeries B_i_gf(int i, int order) {
    if (i < 1) throw Error("B_i_gf: i >= 1 required");
    TruncSeries m = motzkin_gf(order);
    TruncSeries x = make_series({{1, 1}}, order);
    TruncSeries num = TruncSeries::constant(1, order);
    for (int k = 0; k < i; ++k) num = num * x * m;
    TruncSeries den = TruncSeries::constant(1, order) - x -
                      make_series({{2, 2}}, order) * m;
    return div_unit(num, den);
}

TruncSeries H_i_xq(int i, int order, int q_cap) {
    if (i < 1) throw Error("H_i_xq: i >= 1 required");
    AuxCaps caps = AuxCaps::of(-1, default_q_cap(order, q_cap), -1);
    TruncSeries one = TruncSeries::constant(1, order, caps);
    TruncSeries qx = make_series({{1, 1, 0, 1}}, order, caps);
    TruncSeries h = one + qx * substitute_scale(motzkin_gf(order, caps), SVar::x);
    TruncSeries x = make_series({{1, 1}}, order, caps);
    for (int level = 2; level <= i; ++level) h = div_unit(one + x, one - x * (h - one));
    return h;
}

TruncSeries continued_fraction_xq(int order, int q_cap) {
    AuxCaps caps = AuxCaps::of(-1, default_q_cap(order, q_cap), -1);
    TruncSeries one = TruncSeries::constant(1, order, caps);
    // level k: 1 + q^k x - (1 + q^k x) q^{k+1} x / E_{k+1}; each level is a
    // factor of x deeper, so depth order+2 cannot reach the kept coefficients
    TruncSeries level = one;
    for (int k = order + 2; k >= 1; --k) {
        TruncSeries head = make_series({{0, 1}, {1, 1, 0, k}}, order, caps);
        TruncSeries tail = make_series({{1, 1, 0, k + 1}}, order, caps);
        level = head - div_unit(head * tail, level);
    }
    return div_unit(one, one - div_unit(make_series({{1, 1, 0, 1}}, order, caps), level));
}

TruncSeries brute_gf(int order, const EnumLimits& limits) {
    TruncSeries s(order);
    for (int n = 1; n <= order; ++n)
        for (const auto& w : generate_all(n, limits)) {
            PolyominoStats st = stats(w);  // geometric route, not the formulas
            s.at(n).add_term(
                Mono{{static_cast<int>(st.sper), static_cast<int>(st.area), st.last - 1}}, 1);
        }
    return s;
}

TruncSeries brute_inter_gf(int order, const EnumLimits& limits) {
    TruncSeries s(order);
    for (int n = 1; n <= order; ++n)
        for (const auto& w : generate_all(n, limits)) {
            PolyominoStats st = stats(w);
            s.at(n).add_term(Mono{{0, static_cast<int>(st.inter), st.last - 1}}, 1);
        }
    return s;
}

namespace {

EquationReport residual_report(const std::string& name, const TruncSeries& residual) {
    EquationReport rep{name, residual.is_zero(), ""};
    if (!rep.zero) {
        int n = residual.first_nonzero();
        std::ostringstream out;
        out << "x^" << n << ": " << residual.at(n).str();
        rep.first_residual = out.str();
    }
    return rep;
}

}  // namespace

EquationReport check_eqA3(const TruncSeries& brute) {
    int order = brute.order;
    // room for the v -> qv substitution and the 1/(1-qv) expansion
    AuxCaps caps = AuxCaps::of(-1, order * (order + 1) / 2 + order + 2, order + 2);
    TruncSeries a = brute.truncated_to(order, caps);
    TruncSeries a1 = set_var_one(a, Var::v);
    TruncSeries aqv = substitute_scale(a, SVar::v);
    TruncSeries one = TruncSeries::constant(1, order, caps);
    TruncSeries inv_1qv =
        div_unit(one, one - make_series({{0, 1, 0, 1, 1}}, order, caps));
    TruncSeries pqx = make_series({{1, 1, 1, 1}}, order, caps);
    TruncSeries rhs = make_series({{1, 1, 2, 1}}, order, caps) + pqx * inv_1qv * a1 +
                      (make_series({{1, 1, 2, 2, 1}}, order, caps) - pqx * inv_1qv) * aqv;
    return residual_report("eqA3", a - rhs);
}

EquationReport check_interior_equation(const TruncSeries& brute_inter) {
    int order = brute_inter.order;
    AuxCaps caps = AuxCaps::of(-1, order * (order - 1) / 2 + order + 2, order + 2);
    TruncSeries a = brute_inter.truncated_to(order, caps);
    TruncSeries a1 = set_var_one(a, Var::v);
    TruncSeries aqv = substitute_scale(a, SVar::v);
    TruncSeries one = TruncSeries::constant(1, order, caps);
    TruncSeries inv_1qv =
        div_unit(one, one - make_series({{0, 1, 0, 1, 1}}, order, caps));
    TruncSeries x = make_series({{1, 1}}, order, caps);
    TruncSeries xv = make_series({{1, 1, 0, 0, 1}}, order, caps);
    TruncSeries rhs = x + x * inv_1qv * a1 + (xv - x * inv_1qv) * aqv;
    return residual_report("interior", a - rhs);
}

EquationReport check_functional_equation(const std::string& name, int order) {
    if (name == "eqA3") return check_eqA3(brute_gf(order));
    if (name == "interior") return check_interior_equation(brute_inter_gf(order));
    throw Error("unknown functional equation '" + name + "'");
}

std::string series_to_json(const TruncSeries& s) {
    std::ostringstream out;
    out << "{\"order\": " << s.order << ", \"terms\": [";
    bool first = true;
    for (int n = 0; n <= s.order; ++n)
        for (const auto& [m, c] : s.at(n).terms) {
            if (!first) out << ", ";
            first = false;
            out << "{\"x\": " << n << ", \"p\": " << m[Var::p] << ", \"q\": " << m[Var::q]
                << ", \"v\": " << m[Var::v] << ", \"num\": \"" << numerator(c).str()
                << "\", \"den\": \"" << denominator(c).str() << "\"}";
        }
    out << "]}";
    return out.str();
}

}  // namespace motzkin
