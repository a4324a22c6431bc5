#pragma once
// Truncated power series with a fractional leading exponent.
//
// A TruncSeries represents  x^{lead} * (c0 + c1 x + ... + cM x^M)  in a named
// variable, with complex coefficients at working precision.  Series in
// different variables never mix; multiplying series of different truncation
// orders truncates to the shorter one (the tail beyond it is unknown anyway).

#include "uqp/scalar.hpp"

#include <string>
#include <vector>

namespace uqp {

class TruncSeries {
public:
    TruncSeries(std::string var, int order);  // zero series
    static TruncSeries constant(std::string var, int order, const Cplx& c0);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const std::string& var() const { return var_; }

    const Real& lead() const { return lead_; }
    void set_lead(const Real& a) { lead_ = a; }

    Cplx& operator[](int k);
    const Cplx& operator[](int k) const;

    // value at x, including the x^{lead} prefactor (principal branch)
    Cplx eval(const Cplx& x) const;

    TruncSeries& operator*=(const Cplx& s);
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);

private:
    std::string var_;
    Real lead_{0};
    std::vector<Cplx> coeff_;
};

// Cauchy product; leading exponents add, order truncates to the smaller input.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// exp of a series with zero leading exponent (precondition; throws otherwise)
TruncSeries series_exp(const TruncSeries& a);

// log of a series with lead 0 and nonzero constant term (throws otherwise);
// principal branch for the constant term
TruncSeries series_log(const TruncSeries& a);

}  // namespace uqp
