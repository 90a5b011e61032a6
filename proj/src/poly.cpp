#include "motzkin/poly.hpp"

#include <algorithm>
#include <sstream>

#include "motzkin/errors.hpp"

namespace motzkin {

Var var_from_name(const std::string& name) {
    if (name == "p") return Var::p;
    if (name == "q") return Var::q;
    if (name == "v") return Var::v;
    throw Error("unknown variable '" + name + "'");
}

AuxCaps AuxCaps::meet(const AuxCaps& o) const {
    AuxCaps r;
    for (int i = 0; i < 3; ++i) {
        if (cap[i] < 0)
            r.cap[i] = o.cap[i];
        else if (o.cap[i] < 0)
            r.cap[i] = cap[i];
        else
            r.cap[i] = std::min(cap[i], o.cap[i]);
    }
    return r;
}

SparsePoly SparsePoly::constant(const Rat& c) {
    SparsePoly r;
    if (c != 0) r.terms.emplace(Mono{}, c);
    return r;
}

SparsePoly SparsePoly::monomial(const Rat& c, int ep, int eq, int ev) {
    SparsePoly r;
    if (c != 0) r.terms.emplace(Mono{{ep, eq, ev}}, c);
    return r;
}

bool SparsePoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_constant());
}

Rat SparsePoly::constant_term() const {
    auto it = terms.find(Mono{});
    return it == terms.end() ? Rat(0) : it->second;
}

Rat SparsePoly::coeff(const Mono& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
}

int SparsePoly::degree(Var var) const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, m[var]);
    return d;
}

void SparsePoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
    SparsePoly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms) r.terms.emplace(m, coeff * c);
    return r;
}

SparsePoly SparsePoly::with_var_one(Var var) const {
    SparsePoly r;
    for (const auto& [m, c] : terms) {
        Mono nm = m;
        nm[var] = 0;
        r.add_term(nm, c);
    }
    return r;
}

SparsePoly SparsePoly::derivative_at_one(Var var) const {
    SparsePoly r;
    for (const auto& [m, c] : terms) {
        int e = m[var];
        if (e == 0) continue;
        Mono nm = m;
        nm[var] = 0;
        r.add_term(nm, c * e);
    }
    return r;
}

SparsePoly SparsePoly::substituted(Var var, int qpow, const AuxCaps& caps) const {
    SparsePoly r;
    for (const auto& [m, c] : terms) {
        Mono nm = m;
        nm[Var::q] += qpow * m[var];
        if (!caps.admits(nm))
            throw CapExceeded("substitution " + std::string(var_name(var)) + " -> q^" +
                              std::to_string(qpow) + "*" + var_name(var) +
                              " overflows the q cap");
        r.add_term(nm, c);
    }
    return r;
}

SparsePoly SparsePoly::truncated(const AuxCaps& caps) const {
    SparsePoly r;
    for (const auto& [m, c] : terms)
        if (caps.admits(m)) r.terms.emplace(m, c);
    return r;
}

bool SparsePoly::respects(const AuxCaps& caps) const {
    return std::all_of(terms.begin(), terms.end(),
                       [&](const auto& t) { return caps.admits(t.first); });
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b, const AuxCaps& caps) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Mono m = ma * mb;
            if (!caps.admits(m)) continue;
            r.add_term(m, ca * cb);
        }
    return r;
}

SparsePoly invert_unit(const SparsePoly& a, const AuxCaps& caps) {
    Rat c0 = a.constant_term();
    if (c0 == 0) throw NonUnitDivisor("constant term of " + a.str() + " is zero");

    // a = c0 (1 - r); inverse = (1/c0) sum r^k. Terminates because every
    // monomial of r has positive capped degree.
    SparsePoly r;
    long long max_steps = 1;
    for (const auto& [m, c] : a.terms) {
        if (m.is_constant()) continue;
        for (int i = 0; i < 3; ++i)
            if (m.e[i] > 0 && caps.cap[i] < 0)
                throw NonUnitDivisor("cannot invert " + a.str() + ": variable " +
                                     var_name(static_cast<Var>(i)) + " is uncapped");
        r.add_term(m, -c / c0);
    }
    for (int i = 0; i < 3; ++i)
        if (caps.cap[i] >= 0) max_steps += caps.cap[i];

    SparsePoly acc = SparsePoly::constant(1);
    SparsePoly power = SparsePoly::constant(1);
    for (long long k = 0; k < max_steps && !power.is_zero(); ++k) {
        power = mul(power, r, caps);
        acc = acc + power;
    }
    return acc.scaled(1 / c0);
}

SparsePoly geometric_inverse_q(int step, const AuxCaps& caps) {
    SparsePoly r;
    int q_cap = caps[Var::q];
    if (q_cap < 0) throw NonUnitDivisor("geometric series 1/(1-q^i) needs a q cap");
    for (int e = 0; e <= q_cap; e += step) r.add_term(Mono{{0, e, 0}}, 1);
    return r;
}

namespace {

std::string mono_str(const Mono& m, const Rat& c) {
    std::ostringstream out;
    Rat a = c < 0 ? -c : c;
    bool coeff_shown = (a != 1) || m.is_constant();
    if (coeff_shown) out << to_string(a);
    for (Var var : {Var::p, Var::q, Var::v}) {
        int e = m[var];
        if (e == 0) continue;
        out << var_name(var);
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

}  // namespace

std::string SparsePoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        out << mono_str(m, c);
    }
    return out.str();
}

}  // namespace motzkin
