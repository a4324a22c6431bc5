#pragma once
// Zero-mode (lattice) sector.
//
// Vertex operators carry, besides their oscillator exponentials, a word of
// commuting-up-to-scalars factors of three kinds:
//
//   lat  — a root/weight lattice exponential, split into a root-lattice part
//          (rational coordinates in the simple roots alpha_1..alpha_{N-1})
//          and a sum-zero "eta" part in the orthogonal basis ebar_1..ebar_N;
//   Q    — an exponential of the conjugate lattice generators Q_{ebar_j}
//          (rational coordinates m_1..m_N);
//   pow  — a power  base^{sum_j lP_j P_j + sum_j lh_j h_j + lc}  where the
//          base is q^{sigma} (optionally times z = q^{2v}), P_j/h_j are the
//          dynamical and Cartan zero modes, and lc collects plain constants.
//
// Any two factors commute up to a central scalar, so every word has a normal
// form: factors ordered lat < Q < pow, with all reordering scalars (and the
// Baker-Campbell-Hausdorff half-constants from merging same-class factors)
// accumulated into one scalar.  The pairwise central commutators evaluate to
// exact multiples of pi*i and log q over r (tracked as rationals) plus the
// base-dependent contributions of pow factors.

#include "uqp/qparams.hpp"

#include <variant>
#include <vector>

namespace uqp {

struct LatFactor {
    std::vector<Rat> alpha;  // N-1 root-lattice coordinates
    std::vector<Rat> eta;    // N sum-zero coordinates in ebar_j
};

struct QFactor {
    std::vector<Rat> m;  // N coordinates in Q_{ebar_j}
};

struct PowFactor {
    int zslot = 0;           // 1: base includes the running argument z = q^{2v}
    Cplx sigma{Real(0), Real(0)};  // base includes q^{sigma}
    std::vector<Real> lP;    // N coefficients of P_j in the exponent
    std::vector<Real> lh;    // N coefficients of h_j in the exponent
    Real lc{0};              // constant part of the exponent
};

using ZFactor = std::variant<LatFactor, QFactor, PowFactor>;

struct ZeroModeWord {
    std::vector<ZFactor> factors;
    Cplx scalar{Real(1), Real(0)};
};

LatFactor make_lat(const QParams& P, std::vector<Rat> alpha, std::vector<Rat> eta);
QFactor make_qf(const QParams& P, std::vector<Rat> m);
PowFactor make_pow(const QParams& P, int zslot, const Cplx& sigma,
                   std::vector<Real> lP = {}, std::vector<Real> lh = {},
                   const Real& lc = Real(0));

// exact record of the central commutator [A-exponent, B-exponent]
struct CommScalar {
    Rat pi_mult{0};   // multiple of pi*i (lat-lat cocycle)
    Rat over_r{0};    // multiple of (log q)/r (eta and Q pairings)
    Rat r_diff{0};    // multiple of (1/r - 1/rstar) log q (Q-Q pairings)
    Cplx rest{Real(0), Real(0)};  // pow-factor contributions (base-dependent)

    Cplx eval(const QParams& P) const;
};

// A taken from the left word at argument va, B from the right word at vb
CommScalar commutator_scalar(const QParams& P, const ZFactor& A, const ZFactor& B,
                             const Cplx& va, const Cplx& vb);

// scalar picked up when the word of X (argument v1) moves through the word of
// Y (argument v2):  w_X w_Y = exchange_factor * w_Y w_X
Cplx exchange_factor(const QParams& P, const ZeroModeWord& X, const ZeroModeWord& Y,
                     const Cplx& v1, const Cplx& v2);

// reversed word with negated exponents and inverted scalar
ZeroModeWord word_inverse(const QParams& P, const ZeroModeWord& w);

// rewrite with the running argument folded into the constant base:
// pow(zslot=1, sigma) evaluated at v becomes pow(zslot=0, sigma + 2v)
ZeroModeWord absorb_argument(const QParams& P, const ZeroModeWord& w, const Cplx& v);

ZeroModeWord word_concat(const ZeroModeWord& a, const ZeroModeWord& b);

// canonical content of a word at argument v: merged lattice/Q coordinates,
// per-row P and h exponents, the constant exponent, and the accumulated scalar
struct WordSignature {
    std::vector<Rat> alpha, eta, qm;
    std::vector<Cplx> Psig, hsig;
    Cplx cpow{Real(0), Real(0)};
    Cplx scalar{Real(1), Real(0)};
};

WordSignature normal_form(const QParams& P, const ZeroModeWord& w, const Cplx& v);

// 1 if the exact lattice content differs; otherwise the max deviation of the
// continuous parts (P/h exponents, constant exponent, scalar ratio)
Real signature_residual(const QParams& P, const WordSignature& s1, const WordSignature& s2);

}  // namespace uqp
