#include "uqp/qspecial.hpp"

#include <stdexcept>

namespace uqp {

namespace {

const Cplx kOne(Real(1), Real(0));

// i^n without transcendental evaluation
Cplx unit_i_pow(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return Cplx(Real(1), Real(0));
        case 1: return Cplx(Real(0), Real(1));
        case 2: return Cplx(Real(-1), Real(0));
        default: return Cplx(Real(0), Real(-1));
    }
}

}  // namespace

PochResult pochhammer(const QParams& P, const Cplx& z, const std::vector<Real>& bases,
                      int max_degree, bool drop_zero_tuple) {
    for (const Real& b : bases)
        if (!(b > 0 && b < 1)) throw std::domain_error("pochhammer: base outside (0,1)");
    const std::size_t k = bases.size();
    if (k == 0) {
        if (drop_zero_tuple) return {kOne, Real(0)};
        return {kOne - z, Real(0)};
    }
    const Real az = abs(z);
    if (az == 0) return {kOne, Real(0)};
    const Real thr = P.eps;
    // A subtree omitted at level i can contribute at most its geometric sum,
    // amplified by 1/(1-t) for every deeper base.
    std::vector<Real> sfx(k + 1);
    sfx[k] = Real(1);
    for (std::size_t i = k; i-- > 0;) sfx[i] = sfx[i + 1] / (1 - bases[i]);

    Cplx acc = kOne;
    Real omitted(0);

    auto rec = [&](auto&& self, std::size_t i, const Real& pref, bool zero_tuple,
                   long degree_left) -> void {
        const Real& t = bases[i];
        Real f(1);
        long n = 0;
        if (i + 1 == k) {
            while (true) {
                if (!(drop_zero_tuple && zero_tuple && n == 0)) acc *= (kOne - z * (pref * f));
                f *= t;
                ++n;
                if (az * pref * f < thr || (max_degree >= 0 && n > degree_left)) {
                    omitted += az * pref * f / (1 - t);
                    break;
                }
            }
            return;
        }
        while (true) {
            self(self, i + 1, pref * f, zero_tuple && n == 0, degree_left - n);
            f *= t;
            ++n;
            if (az * pref * f < thr || (max_degree >= 0 && n > degree_left)) {
                omitted += az * pref * f / (1 - t) * sfx[i + 1];
                break;
            }
        }
    };
    rec(rec, 0, Real(1), true, max_degree);
    // |prod_omitted (1 - w) - 1| <= e^S - 1 <= S (1 + S) for S = sum |w| < 1
    return {acc, omitted * (1 + omitted)};
}

Cplx poch(const QParams& P, const Cplx& z, const std::vector<Real>& bases) {
    PochResult r = pochhammer(P, z, bases);
    P.tail += r.bound;
    return r.value;
}

Cplx theta(const QParams& P, const Cplx& z, const Real& base) {
    if (z == Cplx(Real(0), Real(0))) throw std::domain_error("theta: argument must be nonzero");
    return poch(P, z, {base}) * poch(P, Cplx(base, Real(0)) / z, {base}) *
           poch(P, Cplx(base, Real(0)), {base});
}

Cplx braces(const QParams& P, const Cplx& z, bool starred) {
    return poch(P, z, {starred ? P.ps : P.p, P.QN});
}

Cplx qnum(const QParams& P, const Cplx& x) {
    return (P.qp(x) - P.qp(-x)) / (P.q - 1 / P.q);
}

Real qnum(const QParams& P, const Real& a, long m) {
    const Real am = a * m;
    return (exp(am * P.L) - exp(-am * P.L)) / (P.q - 1 / P.q);
}

Cplx bracket_gen(const QParams& P, const Cplx& v, const Real& rval, const Real& pval) {
    const Cplx z = exp(Real(2) * v * P.L);
    const Cplx pref = exp((v * v / rval - v) * P.L);
    return pref * theta(P, z, pval) / powi(poch(P, Cplx(pval, Real(0)), {pval}), 3);
}

Cplx bracket(const QParams& P, const Cplx& v) { return bracket_gen(P, v, P.r, P.p); }

Cplx bracket_star(const QParams& P, const Cplx& v) { return bracket_gen(P, v, P.rs, P.ps); }

Real contour_norm_check(const QParams& P, int quad_points, bool starred, const Real& radius) {
    if (quad_points < 8) throw std::invalid_argument("contour_norm_check: too few quadrature points");
    const Real two_pi = 2 * pi_real();
    Cplx s(Real(0), Real(0));
    for (int k = 0; k < quad_points; ++k) {
        const Real th = two_pi * Real(k) / Real(quad_points);
        const Cplx v(radius * cos(th), radius * sin(th));
        const Cplx bv = starred ? bracket_star(P, -v) : bracket(P, -v);
        s += v / bv;
    }
    const Cplx I = (Real(2) * P.L / Real(quad_points)) * s;
    return abs(I - kOne);
}

Cplx kappa(const QParams& P) {
    const Cplx q2(P.q * P.q, Real(0));
    return poch(P, Cplx(P.p, Real(0)), {P.p}) * poch(P, Cplx(P.ps, Real(0)) * q2, {P.ps}) /
           (poch(P, Cplx(P.ps, Real(0)), {P.ps}) * poch(P, Cplx(P.p, Real(0)) * q2, {P.p}));
}

Cplx rho_plus(const QParams& P, const Cplx& v, bool starred, bool star_args_subst) {
    const Cplx z = exp(Real(2) * v * P.L);
    const Real rv = starred ? P.rs : P.r;
    const Real parg = (starred && star_args_subst) ? P.ps : P.p;
    const bool st = starred;
    const Real q2 = P.qp(Real(2));
    const Real q2Nm2 = P.qp(Real(2 * P.N - 2));
    const Real q2N = P.QN;
    const Cplx num = braces(P, parg * q2 * z, st) * braces(P, parg * q2Nm2 * z, st) *
                     braces(P, kOne / z, st) * braces(P, q2N / z, st);
    const Cplx den = braces(P, parg * z, st) * braces(P, parg * q2N * z, st) *
                     braces(P, q2 / z, st) * braces(P, q2Nm2 / z, st);
    const Cplx pref =
        exp((Real(P.N - 1) / P.N) * P.L + (Real(P.N - 1) / (rv * P.N)) * (Real(2) * v * P.L));
    return pref * num / den;
}

Cplx rho_ratio(const QParams& P, const Cplx& v, bool star_args_subst) {
    return rho_plus(P, v, true, star_args_subst) / rho_plus(P, v, false);
}

Cplx mu_star(const QParams& P, const Cplx& v) {
    const Cplx z = exp(Real(2) * v * P.L);
    const Real q2 = P.qp(Real(2));
    const Cplx th = theta(P, q2 / z, P.QN) / theta(P, z, P.QN);
    const Cplx pw = exp((Real(P.N - 1) / P.N) * (Real(2) * v - Real(1)) * P.L);
    return rho_plus(P, v, true, true) * th * pw;
}

Cplx mu_star_braces(const QParams& P, const Cplx& v) {
    const Cplx z = exp(Real(2) * v * P.L);
    const Real q2 = P.qp(Real(2));
    const Real qm2 = P.qp(Real(-2));
    const Real Q = P.QN;
    const Cplx num = braces(P, kOne / z, true) * braces(P, P.ps * Q / z, true) *
                     braces(P, Q * qm2 * z, true) * braces(P, P.ps * q2 * z, true);
    const Cplx den = braces(P, z, true) * braces(P, P.ps * Q * z, true) *
                     braces(P, Q * qm2 / z, true) * braces(P, P.ps * q2 / z, true);
    const Cplx pref = exp((1 / P.rs + 1) * (Real(P.N - 1) / P.N) * (Real(2) * v * P.L));
    return pref * num / den;
}

Cplx phi_N(const QParams& P, const Cplx& z) {
    const Real Q = P.QN;
    const Real q2 = P.qp(Real(2));
    const Real qm2 = P.qp(Real(-2));
    const Cplx num =
        theta(P, q2 * z, Q) * theta(P, P.ps * z, Q) * theta(P, qm2 * z / P.ps, Q);
    const Cplx den =
        theta(P, qm2 * z, Q) * theta(P, z / P.ps, Q) * theta(P, P.ps * q2 * z, Q);
    return num / den;
}

Cplx g_N(const QParams& P) {
    const long N = P.N;
    const Real q2 = P.qp(Real(2));
    const Real qm2 = P.qp(Real(-2));
    Cplx pref = unit_i_pow(N) * exp(((N + 1) / (2 * P.rs) + Real(N * N - 1) / 2) * P.L);
    pref *= powi(poch(P, Cplx(P.ps * q2, Real(0)), {P.ps}) /
                     poch(P, Cplx(P.ps, Real(0)), {P.ps}),
                 N);
    const Cplx num = poch(P, Cplx(P.p * P.QN, Real(0)), {P.QN, P.ps}) *
                     poch(P, Cplx(P.QN * qm2, Real(0)), {P.QN, P.ps});
    const Cplx den = poch(P, Cplx(P.QN * P.ps, Real(0)), {P.QN, P.ps}) *
                     poch(P, Cplx(P.QN, Real(0)), {P.QN, P.ps});
    return pref * num / den;
}

Cplx g_N_prime(const QParams& P) {
    const long N = P.N;
    const Real qm2 = P.qp(Real(-2));
    Cplx pref = unit_i_pow(-N) * exp((-(N + 1) / (2 * P.rs) - Real(N * N - 1) / 2) * P.L);
    pref /= powi(poch(P, Cplx(P.ps, Real(0)), {P.ps}), 2 * N - 3) *
            powi(poch(P, Cplx(qm2, Real(0)), {P.ps}), N);
    const Cplx num = poch(P, Cplx(P.p, Real(0)), {P.QN, P.ps}) *
                     poch(P, Cplx(qm2, Real(0)), {P.QN, P.ps});
    const Cplx den = poch(P, Cplx(P.ps, Real(0)), {P.QN, P.ps}) *
                     poch(P, Cplx(P.QN, Real(0)), {P.QN, P.ps});
    return pref * num / den;
}

Cplx C_n(const QParams& P, long n) {
    const long N = P.N;
    const Real q2 = P.qp(Real(2));
    const Real qmN = P.qp(Real(-N));
    Cplx pref = unit_i_pow(N) * exp(((N + 1) / (2 * P.rs) + Real(N * N - 1) / 2) * P.L);
    pref *= powi(poch(P, Cplx(P.ps * q2, Real(0)), {P.ps}) /
                     poch(P, Cplx(P.ps, Real(0)), {P.ps}),
                 N);
    pref *= powi(Cplx((1 - P.p * qmN) / (1 - qmN), Real(0)), n);
    const Real psn = exp(-2 * n * P.rs * P.L);  // pstar^{-n}
    const Real q2Nm2 = P.qp(Real(2 * N - 2));
    const Cplx num = poch(P, Cplx(P.p * P.QN * psn, Real(0)), {P.QN, P.ps}) *
                     poch(P, Cplx(q2Nm2 * psn, Real(0)), {P.QN, P.ps});
    const Cplx den = poch(P, Cplx(P.QN * psn, Real(0)), {P.QN, P.ps}) *
                     poch(P, Cplx(P.QN * P.ps * psn, Real(0)), {P.QN, P.ps});
    return pref * num / den;
}

}  // namespace uqp
