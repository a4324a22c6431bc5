// Special-function suites: defining identities of the product/theta/bracket
// layer, the contour normalization behind all residue extractions, and the
// unitarity of the fused-current exchange kernel.

#include "uqp/qspecial.hpp"
#include "uqp/report.hpp"

#include <string>

namespace uqp {
namespace {

QParams params_for(const RunConfig& cfg, int N) { return QParams(cfg.q, cfg.r, N, cfg.c); }

void sf_basic(const RunConfig& cfg, SuiteResult& sr) {
    const Real tol("1e-25");
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        const std::string tag = " N=" + std::to_string(N);

        P.reset_tail();
        {
            // (z; b) = (1 - z)(zb; b)
            const Cplx z(Real("0.37"));
            const Cplx lhs = poch(P, z, {P.q});
            const Cplx rhs = (Real(1) - z) * poch(P, z * P.q, {P.q});
            sr.check("poch_shift" + tag, abs(lhs - rhs), tol, P.tail);
        }
        P.reset_tail();
        {
            // theta(b z; b) = -z^{-1} theta(z; b)
            const Cplx z(Real("0.41"), Real("0.18"));
            sr.check("theta_quasiperiod" + tag, abs(theta(P, P.p * z, P.p) + theta(P, z, P.p) / z),
                     tol, P.tail);
        }
        P.reset_tail();
        sr.check("theta_zero" + tag, abs(theta(P, Cplx(Real(1)), P.p)), tol, P.tail);

        const Cplx v(Real("0.37"));
        P.reset_tail();
        sr.check("bracket_odd" + tag, abs(bracket(P, -v) + bracket(P, v)), tol, P.tail);
        P.reset_tail();
        sr.check("bracket_star_odd" + tag, abs(bracket_star(P, -v) + bracket_star(P, v)), tol,
                 P.tail);
        P.reset_tail();
        sr.check("bracket_period" + tag, abs(bracket(P, v + P.r) + bracket(P, v)), tol, P.tail);
        P.reset_tail();
        sr.check("bracket_zero" + tag, abs(bracket(P, Cplx(Real(0)))), tol, P.tail);
    }
}

void sf_contour(const RunConfig& cfg, SuiteResult& sr) {
    const Real tol("1e-10");
    const int quad_points = 2048;
    const Real radius("0.04");
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        const std::string tag = " N=" + std::to_string(N);
        P.reset_tail();
        sr.check("norm" + tag, contour_norm_check(P, quad_points, false, radius), tol, P.tail);
        P.reset_tail();
        sr.check("norm_star" + tag, contour_norm_check(P, quad_points, true, radius), tol, P.tail);
    }
}

void sf_phin(const RunConfig& cfg, SuiteResult& sr) {
    const Real tol("1e-30");
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        Rng rng(derive_seed(cfg.seed, sr.suite) + static_cast<std::uint64_t>(N));
        const Real two_pi = 2 * pi_real();
        Real mx(0);
        P.reset_tail();
        for (int i = 0; i < cfg.samples; ++i) {
            const Real mod = Real("0.6") + Real("0.8") * rng.uniform();
            const Real phi = two_pi * rng.uniform();
            const Cplx z = mod * Cplx(cos(phi), sin(phi));
            const Real resid = abs(phi_N(P, z) * phi_N(P, Real(1) / z) - Real(1));
            if (resid > mx) mx = resid;
        }
        sr.check("unitarity N=" + std::to_string(N), mx, tol, P.tail,
                 std::to_string(cfg.samples) + " random points");
    }
}

}  // namespace

void register_sf_suites() {
    register_suite("sf.basic", sf_basic);
    register_suite("sf.contour", sf_contour);
    register_suite("sf.phin", sf_phin);
}

}  // namespace uqp
