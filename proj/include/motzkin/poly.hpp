#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "motzkin/errors.hpp"
#include "motzkin/numeric.hpp"

namespace motzkin {

/// Auxiliary variables of the statistic polynomials. p marks semiperimeter,
/// q marks area (or interior points), v marks the last-symbol height.
enum class Var : int { p = 0, q = 1, v = 2 };

constexpr const char* var_name(Var var) {
    switch (var) {
        case Var::p: return "p";
        case Var::q: return "q";
        default: return "v";
    }
}

Var var_from_name(const std::string& name);

/// Exponent triple (p, q, v). Orders by total degree, then lexicographically,
/// which is the order monomials print in.
struct Mono {
    std::array<int, 3> e{0, 0, 0};

    int operator[](Var var) const { return e[static_cast<int>(var)]; }
    int& operator[](Var var) { return e[static_cast<int>(var)]; }
    int total_degree() const { return e[0] + e[1] + e[2]; }
    bool is_constant() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
    Mono operator*(const Mono& o) const { return Mono{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}}; }

    friend bool operator==(const Mono&, const Mono&) = default;
    friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
        return a.e <=> b.e;
    }
};

/// Per-variable degree caps; -1 means unbounded. Arithmetic in a capped ring
/// drops every monomial whose exponent exceeds a cap, i.e. works modulo the
/// monomial ideal (p^{cp+1}, q^{cq+1}, v^{cv+1}).
struct AuxCaps {
    std::array<int, 3> cap{-1, -1, -1};

    static AuxCaps none() { return {}; }
    static AuxCaps of(int p_cap, int q_cap, int v_cap) { return AuxCaps{{p_cap, q_cap, v_cap}}; }

    int operator[](Var var) const { return cap[static_cast<int>(var)]; }
    bool unbounded(Var var) const { return (*this)[var] < 0; }
    bool admits(const Mono& m) const {
        for (int i = 0; i < 3; ++i)
            if (cap[i] >= 0 && m.e[i] > cap[i]) return false;
        return true;
    }
    /// Componentwise tighter of the two cap sets.
    AuxCaps meet(const AuxCaps& o) const;

    friend bool operator==(const AuxCaps&, const AuxCaps&) = default;
};

/// Sparse polynomial in p, q, v with exact rational coefficients. Zero
/// coefficients are never stored; the map order makes iteration and printing
/// deterministic.
struct SparsePoly {
    std::map<Mono, Rat> terms;

    static SparsePoly zero() { return {}; }
    static SparsePoly constant(const Rat& c);
    static SparsePoly monomial(const Rat& c, int ep, int eq, int ev);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial (0 if absent).
    Rat constant_term() const;
    Rat coeff(const Mono& m) const;
    int degree(Var var) const;  // -1 for the zero polynomial

    void add_term(const Mono& m, const Rat& c);  // accumulates, erases zeros

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;

    SparsePoly scaled(const Rat& c) const;
    /// Substitute var := 1 (exponents summed out).
    SparsePoly with_var_one(Var var) const;
    /// d/dvar followed by var := 1.
    SparsePoly derivative_at_one(Var var) const;
    /// Substitute var := q^qpow * var. Throws CapExceeded if a rewritten
    /// monomial would violate `caps` (substitution never drops terms).
    SparsePoly substituted(Var var, int qpow, const AuxCaps& caps) const;
    /// Drop monomials outside `caps`.
    SparsePoly truncated(const AuxCaps& caps) const;
    bool respects(const AuxCaps& caps) const;

    std::string str() const;  // "2p^8 + 6p^9 + p^10", "1 - q", "0"

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

SparsePoly mul(const SparsePoly& a, const SparsePoly& b, const AuxCaps& caps);

/// Multiplicative inverse in the capped ring. Requires a nonzero constant
/// term and a cap on every variable occurring in the non-constant part
/// (otherwise the geometric expansion cannot terminate); throws
/// NonUnitDivisor when either fails.
SparsePoly invert_unit(const SparsePoly& a, const AuxCaps& caps);

/// 1/(1 - q^step) expanded in a q-capped ring.
SparsePoly geometric_inverse_q(int step, const AuxCaps& caps);

}  // namespace motzkin
