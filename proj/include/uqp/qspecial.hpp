#pragma once
// q-special functions: multi-base infinite products, theta functions, the
// elliptic bracket [v] and its rstar variant, and the named structure
// constants built from them.
//
// All infinite products are truncated adaptively: factors (1 - z t^n) are
// enumerated until |z t^n| falls below the working threshold, and a first-
// order upper bound for the omitted part is returned (and accumulated on the
// parameter pack) so every downstream comparison can report residual and
// truncation bound side by side.

#include "uqp/qparams.hpp"

#include <vector>

namespace uqp {

struct PochResult {
    Cplx value;
    Real bound;  // first-order relative truncation bound
};

// (z; t_1, ..., t_k)_infinity  =  prod_{n_1..n_k >= 0} (1 - z t_1^{n_1} ... t_k^{n_k}).
// With no bases the product is the single factor (1 - z).  Bases must lie in
// (0,1).  `max_degree`, if >= 0, additionally truncates at total degree
// n_1 + ... + n_k <= max_degree (the bound then covers the cut as well).
// If `drop_zero_tuple` is set, the (0,...,0) factor is omitted: that is the
// residue regularization of a product with a vanishing leading factor.
PochResult pochhammer(const QParams& P, const Cplx& z, const std::vector<Real>& bases,
                      int max_degree = -1, bool drop_zero_tuple = false);

// convenience form; adds the truncation bound into P.tail
Cplx poch(const QParams& P, const Cplx& z, const std::vector<Real>& bases);

// theta(z; b) = (z; b) (b/z; b) (b; b),  z != 0
Cplx theta(const QParams& P, const Cplx& z, const Real& base);

// {z} = (z; p, q^{2N}) and its starred version (z; pstar, q^{2N})
Cplx braces(const QParams& P, const Cplx& z, bool starred = false);

// [x]_q = (q^x - q^{-x}) / (q - q^{-1})
Cplx qnum(const QParams& P, const Cplx& x);
Real qnum(const QParams& P, const Real& a, long m);  // [a m]_q for real a

// elliptic brackets: [v] from (r, p) and [v]* from (rstar, pstar)
Cplx bracket_gen(const QParams& P, const Cplx& v, const Real& rval, const Real& pval);
Cplx bracket(const QParams& P, const Cplx& v);
Cplx bracket_star(const QParams& P, const Cplx& v);

// |I - 1| for the contour normalization  I = oint dz/(2 pi i z [-v]),  z = q^{2v},
// taken over a small circle in v and evaluated by the trapezoid rule with
// `quad_points` nodes (starred: use [-v]*)
Real contour_norm_check(const QParams& P, int quad_points, bool starred,
                        const Real& radius);

// named constants / structure functions
Cplx kappa(const QParams& P);
Cplx rho_plus(const QParams& P, const Cplx& v, bool starred = false,
              bool star_args_subst = true);
// rho(v) = rho^{+*}(v) / rho^{+}(v); the starred factor reads p -> pstar in
// the brace arguments when star_args_subst is set (the realization-consistent
// reading; the literal reading is kept for negative controls)
Cplx rho_ratio(const QParams& P, const Cplx& v, bool star_args_subst = true);

// self-exchange structure function of the level-(N-1) dressing current:
// closed form  rho^{+*}(v) theta_{q^{2N}}(q^2/z) / theta_{q^{2N}}(z) * (z/q)^{(N-1)/N}
Cplx mu_star(const QParams& P, const Cplx& v);
// same function as a ratio of brace products (independent evaluation route)
Cplx mu_star_braces(const QParams& P, const Cplx& v);

// theta-quotient exchange kernel of the fused-current algebra
Cplx phi_N(const QParams& P, const Cplx& z);

Cplx g_N(const QParams& P);
Cplx g_N_prime(const QParams& P);
Cplx C_n(const QParams& P, long n);

}  // namespace uqp
