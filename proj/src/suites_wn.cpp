// Deformed W-algebra suites: basic-field exchange against the elliptic
// structure function, the fused-current scattering factorization over the
// argument ladder, scattering unitarity, nontriviality of the fused
// composite, and the quadratic-relation constants.

#include "uqp/currents.hpp"
#include "uqp/fusionwn.hpp"
#include "uqp/modealg.hpp"
#include "uqp/qspecial.hpp"
#include "uqp/report.hpp"

#include "suite_samples.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace uqp {
namespace {

QParams params_for(const RunConfig& cfg, int N) { return QParams(cfg.q, cfg.r, N, cfg.c); }

std::string ntag(int N) { return " N=" + std::to_string(N); }

void wn_lambda(const RunConfig& cfg, SuiteResult& sr) {
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        for (const auto& [a, b] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 1}}) {
            if (a > N || b > N) continue;
            const ExchangeFn f(P, current_Lambda(P, a), current_Lambda(P, b));
            P.reset_tail();
            Real mx(0);
            for (const auto& [v1, v2] : canonical_samples()) {
                const Cplx x = exp(Real(2) * (v2 - v1) * P.L);
                const Real resid = abs(f(v1, v2) / phi_N(P, x) - Real(1));
                if (resid > mx) mx = resid;
            }
            sr.check("exchange_" + std::to_string(a) + std::to_string(b) + ntag(N), mx,
                     Real("1e-25"), P.tail);
        }
    }
}

void wn_tt(const RunConfig& cfg, SuiteResult& sr) {
    // fused currents of widths n and m exchange with the closed scattering
    // factor; every choice of index tuples in the two fused sums must give
    // the same grid product, so scan all term pairs
    const Real tol("1e-22");
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        const Cplx v1(Real("0.21"));
        const Cplx v2(Real("0.4"), Real("0.13"));
        const Cplx x = exp(Real(2) * (v2 - v1) * P.L);

        std::vector<VertexDescriptor> lam;
        for (int j = 1; j <= N; ++j) lam.push_back(current_Lambda(P, j));
        std::map<std::pair<int, int>, ExchangeFn> cache;
        const auto fn = [&](int a, int b) -> const ExchangeFn& {
            const auto key = std::make_pair(a, b);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, ExchangeFn(P, lam[static_cast<std::size_t>(a - 1)],
                                                   lam[static_cast<std::size_t>(b - 1)]))
                         .first;
            return it->second;
        };

        for (const auto& [n, m] : {std::pair<int, int>{1, 1}, {2, 1}, {2, 2}}) {
            if (n > N || m > N) continue;
            P.reset_tail();
            const Cplx want = smatrix_factor(P, n, m, x);
            const FusedCurrent Tn = build_Ttilde(P, n), Tm = build_Ttilde(P, m);
            Real mx(0);
            for (const FusedTerm& ta : Tn.terms)
                for (const FusedTerm& tb : Tm.terms) {
                    Cplx tot(Real(1));
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= m; ++l) {
                            const Cplx w1 = v1 + Real(n + 1 - 2 * k) * P.rs / 2;
                            const Cplx w2 = v2 + Real(m + 1 - 2 * l) * P.rs / 2;
                            tot *= fn(ta.indices[static_cast<std::size_t>(k - 1)],
                                      tb.indices[static_cast<std::size_t>(l - 1)])(w1, w2);
                        }
                    const Real resid = abs(tot / want - Real(1));
                    if (resid > mx) mx = resid;
                }
            sr.check("factorized_" + std::to_string(n) + std::to_string(m) + ntag(N), mx, tol,
                     P.tail,
                     std::to_string(Tn.terms.size() * Tm.terms.size()) + " term pairs");
        }
    }
}

void wn_smatrix(const RunConfig& cfg, SuiteResult& sr) {
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        const std::vector<Cplx> xs = {
            exp(Real(2) * (Cplx(Real("0.4"), Real("0.13")) - Real("0.21")) * P.L),
            Cplx(Real("0.73"), Real("0.22")),
        };
        P.reset_tail();
        Real mx(0);
        for (const auto& [n, m] : {std::pair<int, int>{1, 1}, {2, 1}, {2, 2}}) {
            if (n > N || m > N) continue;
            for (const Cplx& x : xs) {
                const Real resid =
                    abs(smatrix_factor(P, n, m, x) * smatrix_factor(P, m, n, Real(1) / x) -
                        Real(1));
                if (resid > mx) mx = resid;
            }
        }
        sr.check("unitarity" + ntag(N), mx, Real("1e-30"), P.tail);
    }
}

void wn_tn_nontrivial(const RunConfig& cfg, SuiteResult& sr) {
    // the width-N fused composite keeps a nonzero commutator with the
    // deformation modes, while the same index ladder with unit (instead of
    // rstar-proportional) steps is annihilated by the mode constraint
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        const FusedCurrent TN = build_Ttilde(P, N);
        const OscProfile prof_star = fused_osc_profile(P, TN.terms[0]);
        OscProfile prof_unit = prof_star;
        for (OscTerm& t : prof_unit) t.sigma = Cplx(Real(N + 1 - 2 * t.j));

        Real mx_star(0), mx_unit(0);
        for (long m : {1L, 2L, 3L}) {
            const auto cs = osc_coeffs(P, prof_star, m);
            const auto cu = osc_coeffs(P, prof_unit, m);
            for (int k = 1; k <= N; ++k) {
                Cplx s_star(Real(0)), s_unit(Real(0));
                Real scale(1);
                for (const auto& [j, c] : cs) s_star += c * B_commutator_value(P, j, k, m);
                for (const auto& [j, c] : cu) {
                    const Cplx term = c * B_commutator_value(P, j, k, m);
                    s_unit += term;
                    if (abs(term) > scale) scale = abs(term);
                }
                if (abs(s_star) > mx_star) mx_star = abs(s_star);
                // relative to the largest term: the raw magnitudes grow like
                // q^{-rm} and would mask the cancellation otherwise
                const Real ru = abs(s_unit) / scale;
                if (ru > mx_unit) mx_unit = ru;
            }
        }
        sr.check_flag("ladder_acts" + ntag(N), mx_star > Real("1e-10"),
                      "max mode commutator " + sci(mx_star));
        sr.check("unit_ladder_cancels" + ntag(N), mx_unit, Real("1e-30"));

        // the fused zero-mode word is itself nontrivial
        const WordSignature sig = normal_form(P, fused_word(P, TN.terms[0]), Cplx(Real(0)));
        Real mxp(0);
        for (const Cplx& pv : sig.Psig)
            if (abs(pv) > mxp) mxp = abs(pv);
        sr.check_flag("zero_mode_nontrivial" + ntag(N), mxp > Real("1e-10"),
                      "max lattice-momentum component " + sci(mxp));
    }
}

void wn_cn(const RunConfig& cfg, SuiteResult& sr) {
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        P.reset_tail();
        const Cplx g = g_N(P);
        sr.check("c0_matches_gN" + ntag(N), abs(C_n(P, 0) / g - Real(1)), Real("1e-30"),
                 P.tail);

        bool ok = true;
        std::string note = "C_n:";
        for (int n = 0; n <= N; ++n) {
            const Cplx v = C_n(P, n);
            if (!(abs(v) > Real("1e-20") && abs(v) < Real("1e20"))) ok = false;
            note += " " + decimal(v, 10);
        }
        sr.check_flag("cn_finite" + ntag(N), ok, note);
    }
}

}  // namespace

void register_wn_suites() {
    register_suite("wn.lambda", wn_lambda);
    register_suite("wn.tt", wn_tt);
    register_suite("wn.smatrix", wn_smatrix);
    register_suite("wn.tn_nontrivial", wn_tn_nontrivial);
    register_suite("wn.cn", wn_cn);
}

}  // namespace uqp
