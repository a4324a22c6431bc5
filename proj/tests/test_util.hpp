#pragma once
// Shared helpers for the unit tests: working-precision setup and residual
// assertions with readable failure output.

#include "doctest.h"

#include "uqp/qparams.hpp"
#include "uqp/scalar.hpp"

#include <string>

namespace testutil {

using uqp::Cplx;
using uqp::QParams;
using uqp::Real;

inline QParams make_params(int N, const char* q = "0.4", const char* r = "6.3", int c = 1) {
    uqp::set_precision_bits(128);
    return QParams(q, r, N, c);
}

inline void small(const Real& x, const char* tol) {
    CHECK_MESSAGE(x < Real(tol), "residual " << uqp::sci(x) << " vs tol " << std::string(tol));
}

// |got - want| <= tol * max(1, |want|)
inline void close_to(const Cplx& got, const Cplx& want, const char* tol = "1e-33") {
    Real sc = abs(want);
    if (sc < 1) sc = Real(1);
    small(abs(got - want) / sc, tol);
}

inline void close_to(const Real& got, const Real& want, const char* tol = "1e-33") {
    close_to(Cplx(got), Cplx(want), tol);
}

inline void close_str(const Cplx& got, const char* want_re, const char* want_im = "0",
                      const char* tol = "1e-33") {
    close_to(got, uqp::cplx_from_decimal(want_re, want_im), tol);
}

}  // namespace testutil
