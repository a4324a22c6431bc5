#pragma once
// Run parameters and derived constants.
//
// The engine works at 0 < q < 1, level c (a positive integer, normally 1) and
// elliptic parameter r > c.  Derived quantities:
//
//     rstar = r - c,     L = log q  (< 0),
//     p  = q^{2r},   pstar = q^{2 rstar},   QN = q^{2N}.
//
// Multiplicative variables are always powers of q: z = q^{2v}.  Exponents that
// must stay exact are carried as ExpPair forms a + b*rstar and materialized
// with qe().
//
// QParams also owns the truncation-error account: infinite-product evaluations
// register an upper bound for their truncation tail in `tail`, which checks
// reset before and read after an evaluation to report an honest error bound
// alongside the measured residual.

#include "uqp/rational.hpp"
#include "uqp/scalar.hpp"

#include <string>

namespace uqp {

class QParams {
public:
    QParams(const std::string& q_dec, const std::string& r_dec, int N, int c = 1);

    // configuration, kept verbatim so the pack can be re-instantiated at a
    // higher working precision
    std::string q_dec, r_dec;
    int N;
    int c_int;

    Real q, r, c, rs;  // rs = r - c
    Real L;            // log q
    Real p, ps, QN;    // q^{2r}, q^{2 rs}, q^{2N}

    ExpPair sl_r;   // r  as exponent form  (c + rstar)
    ExpPair sl_rs;  // rstar
    ExpPair sl_c;   // c
    ExpPair sl_int(long long n) const { return {Rat(n), Rat(0)}; }

    Real rat(const Rat& x) const;
    Real qe(const ExpPair& e) const;  // q^{a + b*rstar}
    Real qp(const Real& e) const;     // q^e
    Cplx qp(const Cplx& e) const;

    // truncation threshold for infinite products, tied to working precision
    Real eps;

    // accumulated truncation bound (relative, first order); see pochhammer()
    mutable Real tail;
    void reset_tail() const { tail = Real(0); }
};

}  // namespace uqp
