#pragma once
// Operator-product calculus between free-field vertex operators.
//
// A vertex operator X(z) is described by
//   * a symbolic oscillator profile: for each oscillator row j, the
//     coefficient of B^j_m in log X as an exact Laurent polynomial in
//     q^{(a + b rstar) m} divided by products of differences
//     (q^{bm} - q^{-bm}) and a single power of 1/m;
//   * a numeric oscillator profile (an independent transcription of the same
//     data, used to cross-check the symbolic route order by order);
//   * a zero-mode word (see zeromode.hpp).
//
// Contracting two profiles with the mode commutators gives the logarithm of
// the pairing function gamma(x) = sum_m gamma_m x^m with gamma_m * m an exact
// Laurent polynomial over a product of the allowed denominators.  The central
// design decision of the engine: rather than exponentiating that series
// numerically, gamma_m is recognized exactly as a finite sum of terms
// c * q^{e m} / prod_i (1 - t_i^m), which exponentiates in closed form into
// multi-base infinite products  prod (t^n-arguments; bases).  This makes every
// pairing function an explicit meromorphic object with exact zero/pole
// bookkeeping, valid far beyond the |x| < 1 disk where the series converges.

#include "uqp/qparams.hpp"
#include "uqp/series.hpp"
#include "uqp/zeromode.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace uqp {

// ---- exact Laurent maps in q^{(a + b rstar) m} ------------------------------

using SMap = std::map<ExpPair, Rat, ExpKeyLess>;

SMap sadd(const SMap& A, const SMap& B);
SMap smul(const SMap& A, const SMap& B);
SMap sshift(const SMap& A, const ExpPair& e0);
SMap sneg(const SMap& A);
SMap sconst(const Rat& c = Rat(1), const ExpPair& e = ExpPair{});
SMap brm(const ExpPair& b);     // q^{bm} - q^{-bm}
SMap subst_negm(const SMap& A);  // m -> -m

// exact division by (q^{bm} - q^{-bm}); empty optional if not exact
bool sdiv(const SMap& num, const ExpPair& b, SMap& quotient);

// ---- oscillator profiles ----------------------------------------------------

// one row of a symbolic profile: num / (prod_i (q^{d_i m} - q^{-d_i m}) * m^{mpow})
struct SymRow {
    SMap num;
    std::vector<ExpPair> den;  // slopes d_i
    int mpow = 1;
};
using SymProfile = std::map<int, SymRow>;  // oscillator row -> coefficient

SymProfile sym_scale(const SymProfile& prof, const Rat& f);

// numeric profile: a list of terms  scale * kind(m) * q^{-sigma m}  at row j
enum class OscKind {
    RRatio,     // [r m] / (m [rstar m])
    InvM,       // 1 / m
    OneRatio,   // [m] / (m [rstar m])
    ThetaDiff,  // (q^{r m} - q^{-r m}) / m
};
struct OscTerm {
    int j;
    OscKind kind;
    Cplx sigma{Real(0), Real(0)};
    Real scale{1};
};
using OscProfile = std::vector<OscTerm>;

OscProfile osc_shift(const OscProfile& prof, const Cplx& sigma);
OscProfile osc_scale(const OscProfile& prof, const Real& f);
OscProfile osc_concat(const OscProfile& a, const OscProfile& b);

// coefficient map row -> value at mode m (m != 0)
std::map<int, Cplx> osc_coeffs(const QParams& P, const OscProfile& prof, long m);

// ---- vertex descriptors -----------------------------------------------------

struct VertexDescriptor {
    std::string name;
    SymProfile sym;
    OscProfile osc;
    ZeroModeWord word;
};

// ---- contraction ------------------------------------------------------------

// gamma_m * m as one exact Laurent map over a common denominator
struct GammaTemplate {
    SMap num;
    std::vector<ExpPair> den;
};

// contract X(z1) with Y(z2) through the mode commutators (symbolic route)
GammaTemplate contraction_template(const QParams& P, const SymProfile& X, const SymProfile& Y);

// numeric route: gamma_m = sum_{j,k} cX_m(j) cY_{-m}(k) [B^j_m, B^k_{-m}]
Cplx contraction_coeff(const QParams& P, const OscProfile& X, const OscProfile& Y, long m);

// log of the pairing function as a truncated series in x = z2/z1
TruncSeries log_contraction(const QParams& P, const OscProfile& X, const OscProfile& Y,
                            int order, const std::string& var = "x");

// partial sum sum_{m=1..M} gamma_m x^m (independent series route)
Cplx contraction_series_sum(const QParams& P, const OscProfile& X, const OscProfile& Y,
                            const Cplx& x, int M);

// ---- product forms ----------------------------------------------------------

// one factor  pochhammer(q^{arg} x; q^{2 b_1}, ..., q^{2 b_k}) ^ {-coef}
struct PFTerm {
    Rat coef;
    ExpPair arg;
    std::vector<ExpPair> bases;
};
using ProductForm = std::vector<PFTerm>;

// exact recognition of a gamma template as a product form; throws
// std::domain_error if a denominator slope is not positive (the factor would
// not be a convergent infinite product)
ProductForm recognize_products(const QParams& P, const GammaTemplate& g);

// evaluate; truncation bounds are accumulated on P.tail weighted by |coef|
Cplx pf_eval(const QParams& P, const ProductForm& pf, const Cplx& x);

// evaluate with vanishing factors at x0 dropped (residue regularization):
// an empty-bases factor whose argument is 1 at x0 is skipped entirely; a
// multi-base factor whose leading argument is 1 drops only its zero tuple
Cplx pf_eval_regularized(const QParams& P, const ProductForm& pf, const Cplx& x0);

// exact zero/pole bookkeeping: q-exponent of each singular point x0 -> net
// order (positive = zero).  Scans base tuples up to total degree `depth` per
// base, enough to see the physical pole towers.
std::map<ExpPair, Rat, ExpKeyLess> pf_singular_exponents(const QParams& P,
                                                         const ProductForm& pf,
                                                         int depth = 4);

// distance from the origin to the nearest singular argument (n=0 tuples)
Real pf_min_radius(const QParams& P, const ProductForm& pf);

// ---- exchange ---------------------------------------------------------------

// meromorphic exchange ratio X(z1) Y(z2) = [ratio] Y(z2) X(z1): the two
// pairing functions evaluated at x and 1/x times the zero-mode factor
class ExchangeFn {
public:
    ExchangeFn(const QParams& P, const VertexDescriptor& X, const VertexDescriptor& Y);
    Cplx operator()(const Cplx& v1, const Cplx& v2) const;

    const ProductForm& forward() const { return txy_; }
    const ProductForm& reverse() const { return tyx_; }

private:
    const QParams* P_;
    ProductForm txy_, tyx_;
    ZeroModeWord wx_, wy_;
};

// X(z q^{sigma}) Y(z) composed at coincident argument, sigma = a + b rstar
// given exactly; requires the pairing function to be regular or have at most
// a simple pole at x = q^{-sigma} (throws std::domain_error on a higher-order
// pole)
VertexDescriptor specialize_compose(const QParams& P, const VertexDescriptor& X,
                                    const VertexDescriptor& Y, const ExpPair& sigma_q);

struct RelationOutcome {
    Real max_residual{0};
    Real bound{0};  // accumulated truncation bound over all evaluations
};

// max relative deviation of fn from target over the samples
RelationOutcome compare_structure_function(
    const QParams& P, const std::function<Cplx(const Cplx&, const Cplx&)>& fn,
    const std::function<Cplx(const Cplx&, const Cplx&)>& target,
    const std::vector<std::pair<Cplx, Cplx>>& samples);

}  // namespace uqp
