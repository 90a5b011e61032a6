#include "motzkin/series.hpp"

#include <sstream>

#include "motzkin/errors.hpp"

namespace motzkin {

SVar svar_from_name(const std::string& name) {
    if (name == "x") return SVar::x;
    if (name == "p") return SVar::p;
    if (name == "q") return SVar::q;
    if (name == "v") return SVar::v;
    throw Error("unknown series variable '" + name + "'");
}

TruncSeries TruncSeries::zero(int order, AuxCaps caps) { return TruncSeries(order, caps); }

TruncSeries TruncSeries::constant(const Rat& c, int order, AuxCaps caps) {
    TruncSeries s(order, caps);
    s.at(0) = SparsePoly::constant(c);
    return s;
}

bool TruncSeries::is_zero() const { return first_nonzero() < 0; }

int TruncSeries::first_nonzero() const {
    for (int n = 0; n <= order; ++n)
        if (!at(n).is_zero()) return n;
    return -1;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeff) c = -c;
    return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(std::min(order, o.order), caps.meet(o.caps));
    for (int n = 0; n <= r.order; ++n) r.at(n) = (at(n) + o.at(n)).truncated(r.caps);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(std::min(order, o.order), caps.meet(o.caps));
    for (int n = 0; n <= r.order; ++n) r.at(n) = (at(n) - o.at(n)).truncated(r.caps);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(std::min(order, o.order), caps.meet(o.caps));
    for (int i = 0; i <= r.order; ++i) {
        if (at(i).is_zero()) continue;
        const SparsePoly a = at(i).truncated(r.caps);
        for (int j = 0; i + j <= r.order; ++j) {
            if (o.at(j).is_zero()) continue;
            r.at(i + j) = r.at(i + j) + mul(a, o.at(j), r.caps);
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries r(order, caps);
    for (int n = 0; n <= order; ++n) r.at(n) = at(n).scaled(c);
    return r;
}

TruncSeries TruncSeries::truncated_to(int new_order, AuxCaps new_caps) const {
    if (new_order > order) throw Error("cannot extend a truncated series");
    TruncSeries r(new_order, new_caps);
    for (int n = 0; n <= new_order; ++n) r.at(n) = at(n).truncated(new_caps);
    return r;
}

TruncSeries make_series(std::initializer_list<XTerm> terms, int order, AuxCaps caps) {
    TruncSeries s(order, caps);
    for (const auto& t : terms) {
        if (t.xexp > order) continue;
        Mono m{{t.ep, t.eq, t.ev}};
        if (!caps.admits(m)) throw CapExceeded("series literal term exceeds caps");
        s.at(t.xexp).add_term(m, t.c);
    }
    return s;
}

TruncSeries scalar_mul(const TruncSeries& s, const Rat& c) { return s.scaled(c); }

TruncSeries div_unit(const TruncSeries& num, const TruncSeries& den) {
    TruncSeries r(std::min(num.order, den.order), num.caps.meet(den.caps));
    if (den.at(0).constant_term() == 0)
        throw NonUnitDivisor("denominator has zero constant coefficient");
    const SparsePoly inv0 = invert_unit(den.at(0).truncated(r.caps), r.caps);
    for (int n = 0; n <= r.order; ++n) {
        SparsePoly acc = num.at(n).truncated(r.caps);
        for (int k = 1; k <= n; ++k)
            acc = acc - mul(den.at(k).truncated(r.caps), r.at(n - k), r.caps);
        r.at(n) = mul(acc, inv0, r.caps);
    }
    return r;
}

TruncSeries sqrt_unit(const TruncSeries& s) {
    if (s.at(0) != SparsePoly::constant(1))
        throw NonUnitConstant("sqrt requires constant term exactly 1");
    TruncSeries r(s.order, s.caps);
    r.at(0) = SparsePoly::constant(1);
    for (int n = 1; n <= s.order; ++n) {
        // c_n = (s_n - sum_{k=1}^{n-1} c_k c_{n-k}) / 2
        SparsePoly acc = s.at(n);
        for (int k = 1; k < n; ++k) acc = acc - mul(r.at(k), r.at(n - k), s.caps);
        r.at(n) = acc.scaled(Rat(1, 2));
    }
    return r;
}

TruncSeries substitute_scale(const TruncSeries& s, SVar var, int qpow) {
    TruncSeries r(s.order, s.caps);
    if (var == SVar::x) {
        for (int n = 0; n <= s.order; ++n) {
            SparsePoly shifted;
            for (const auto& [m, c] : s.at(n).terms) {
                Mono nm = m;
                nm[Var::q] += qpow * n;
                if (!s.caps.admits(nm)) throw CapExceeded("x -> q^k x overflows the q cap");
                shifted.add_term(nm, c);
            }
            r.at(n) = shifted;
        }
        return r;
    }
    Var aux = var == SVar::p ? Var::p : (var == SVar::q ? Var::q : Var::v);
    for (int n = 0; n <= s.order; ++n) r.at(n) = s.at(n).substituted(aux, qpow, s.caps);
    return r;
}

TruncSeries set_var_one(const TruncSeries& s, Var var) {
    TruncSeries r(s.order, s.caps);
    for (int n = 0; n <= s.order; ++n) r.at(n) = s.at(n).with_var_one(var);
    return r;
}

TruncSeries derivative_at_one(const TruncSeries& s, Var var) {
    TruncSeries r(s.order, s.caps);
    for (int n = 0; n <= s.order; ++n) r.at(n) = s.at(n).derivative_at_one(var);
    return r;
}

TruncSeries shift_div_x(const TruncSeries& s, int k) {
    for (int j = 0; j < k; ++j)
        if (!s.at(j).is_zero())
            throw ShiftResidue("x^" + std::to_string(j) + " coefficient " + s.at(j).str() +
                               " should vanish before dividing by x^" + std::to_string(k));
    TruncSeries r(s.order - k, s.caps);
    for (int n = 0; n <= r.order; ++n) r.at(n) = s.at(n + k);
    return r;
}

TruncSeries div_var(const TruncSeries& s, Var var, int k) {
    TruncSeries r(s.order, s.caps);
    for (int n = 0; n <= s.order; ++n) {
        SparsePoly reduced;
        for (const auto& [m, c] : s.at(n).terms) {
            if (m[var] < k)
                throw ShiftResidue(std::string("monomial lacks ") + var_name(var) + "^" +
                                   std::to_string(k) + " at x^" + std::to_string(n));
            Mono nm = m;
            nm[var] -= k;
            reduced.add_term(nm, c);
        }
        r.at(n) = reduced;
    }
    return r;
}

std::string TruncSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int n = 0; n <= order; ++n) {
        const SparsePoly& c = at(n);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = false;
        if (c.terms.size() == 1 && cs.starts_with('-')) {
            negative = true;
            cs.erase(0, 1);
        }
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (n == 0) {
            out << cs;
            continue;
        }
        if (c.terms.size() > 1)
            out << '(' << cs << ") ";
        else if (cs != "1")
            out << cs << ' ';
        out << 'x';
        if (n > 1) out << '^' << n;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace motzkin
