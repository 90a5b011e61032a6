#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "motzkin/poly.hpp"

namespace motzkin {

/// Variables a series substitution can target: the main variable x or one of
/// the aux variables.
enum class SVar { x, p, q, v };

SVar svar_from_name(const std::string& name);

/// Truncated formal power series in x with SparsePoly coefficients, exact up
/// to and including x^order. Binary operations truncate to the smaller order
/// and the tighter caps of the operands.
struct TruncSeries {
    int order = 0;
    AuxCaps caps;
    std::vector<SparsePoly> coeff;  // size order + 1

    TruncSeries() : coeff(1) {}
    TruncSeries(int order_, AuxCaps caps_ = AuxCaps::none())
        : order(order_), caps(caps_), coeff(static_cast<std::size_t>(order_) + 1) {}

    static TruncSeries zero(int order, AuxCaps caps = AuxCaps::none());
    static TruncSeries constant(const Rat& c, int order, AuxCaps caps = AuxCaps::none());

    const SparsePoly& at(int n) const { return coeff[static_cast<std::size_t>(n)]; }
    SparsePoly& at(int n) { return coeff[static_cast<std::size_t>(n)]; }

    bool is_zero() const;
    /// First x-order with a nonzero coefficient, or -1 if zero.
    int first_nonzero() const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;

    TruncSeries scaled(const Rat& c) const;
    TruncSeries truncated_to(int order, AuxCaps caps) const;

    std::string str() const;  // paper-style monomial list

    /// Value equality: same order and coefficients; caps are a computation
    /// detail and do not participate.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order == b.order && a.coeff == b.coeff;
    }
};

/// One x-monomial of a series literal: c * p^ep q^eq v^ev x^xexp.
struct XTerm {
    int xexp = 0;
    Rat c = 0;
    int ep = 0, eq = 0, ev = 0;
};

/// Series from a term list; terms beyond `order` are ignored, aux terms must
/// respect `caps`.
TruncSeries make_series(std::initializer_list<XTerm> terms, int order,
                        AuxCaps caps = AuxCaps::none());

TruncSeries scalar_mul(const TruncSeries& s, const Rat& c);

/// num/den where den's (x^0, aux^0) coefficient is a nonzero rational.
/// Satisfies num = result * den up to the result order.
TruncSeries div_unit(const TruncSeries& num, const TruncSeries& den);

/// Square root with constant term +1; requires the x^0 coefficient to be
/// exactly 1 (NonUnitConstant otherwise).
TruncSeries sqrt_unit(const TruncSeries& s);

/// Substitute var := q^qpow * var for var in {x, v} (and trivially p).
/// CapExceeded if a rewritten monomial would exceed the series caps.
TruncSeries substitute_scale(const TruncSeries& s, SVar var, int qpow = 1);

/// Substitute var := 1.
TruncSeries set_var_one(const TruncSeries& s, Var var);

/// d/dvar followed by var := 1; the "total statistic" extractor.
TruncSeries derivative_at_one(const TruncSeries& s, Var var);

/// Exact division by x^k; throws ShiftResidue unless coefficients 0..k-1
/// vanish. Result order shrinks by k.
TruncSeries shift_div_x(const TruncSeries& s, int k);

/// Exact division by var^k, throws ShiftResidue unless every monomial in
/// every coefficient carries at least var^k.
TruncSeries div_var(const TruncSeries& s, Var var, int k);

}  // namespace motzkin
