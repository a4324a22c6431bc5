#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/currents.hpp"
#include "uqp/opecalc.hpp"
#include "uqp/qspecial.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace uqp;
using testutil::close_to;
using testutil::make_params;
using testutil::small;

namespace {

// evaluate gamma_m from a symbolic template directly
Cplx gamma_at(const QParams& P, const GammaTemplate& g, long m) {
    Cplx num(Real(0));
    for (const auto& [e, c] : g.num) num += P.rat(c) * pow(P.qe(e), m);
    Cplx den{Real(m)};
    for (const ExpPair& d : g.den) {
        const Real b = P.qe(d);
        den *= pow(b, m) - pow(b, -m);
    }
    return num / den;
}

}  // namespace

TEST_CASE("Laurent map algebra") {
    const QParams P = make_params(2);
    // (q^{am} - q^{-am})(q^{bm} - q^{-bm}) expands to four exponentials
    const ExpPair a{Rat(1), Rat(0)}, b{Rat(0), Rat(1)};
    const SMap prod = smul(brm(a), brm(b));
    CHECK(prod.size() == 4);
    CHECK(prod.at(eadd(a, b)) == Rat(1));
    CHECK(prod.at(esub(a, b)) == Rat(-1));
    CHECK(prod.at(eneg(eadd(a, b))) == Rat(1));

    // exact division recovers the cofactor
    SMap back;
    REQUIRE(sdiv(prod, a, back));
    CHECK(back == brm(b));
    SMap no;
    CHECK_FALSE(sdiv(sconst(), a, no));

    // m -> -m flips every exponent
    CHECK(subst_negm(prod) == prod);  // the product above is even in m
    CHECK(subst_negm(brm(a)) == sneg(brm(a)));
}

TEST_CASE("symbolic and numeric contraction routes agree term by term") {
    for (int N : {2, 3}) {
        const QParams P = make_params(N);
        const auto E1 = current_E(P, 1);
        const auto K1 = current_K(P, 1);
        const auto F1 = current_F(P, 1);
        const GammaTemplate gee = contraction_template(P, E1.sym, E1.sym);
        const GammaTemplate gke = contraction_template(P, K1.sym, E1.sym);
        const GammaTemplate gef = contraction_template(P, E1.sym, F1.sym);
        struct Case {
            const GammaTemplate* g;
            const OscProfile* x;
            const OscProfile* y;
        };
        const Case cases[] = {{&gee, &E1.osc, &E1.osc},
                              {&gke, &K1.osc, &E1.osc},
                              {&gef, &E1.osc, &F1.osc}};
        Real mx(0);
        for (long m = 1; m <= 24; ++m) {
            for (const Case& pr : cases) {
                const Cplx sym = gamma_at(P, *pr.g, m);
                const Cplx num = contraction_coeff(P, *pr.x, *pr.y, m);
                Real sc = abs(sym);
                if (sc < 1) sc = Real(1);
                const Real d = abs(sym - num) / sc;
                if (d > mx) mx = d;
            }
        }
        small(mx, "1e-25");
    }
}

TEST_CASE("contraction coefficients are bilinear in the profiles") {
    const QParams P = make_params(3);
    const auto E1 = current_E(P, 1);
    const auto K1 = current_K(P, 1);
    const auto K2 = current_K(P, 2);
    const long m = 3;
    const Cplx lhs = contraction_coeff(P, osc_concat(K1.osc, K2.osc), E1.osc, m);
    const Cplx rhs =
        contraction_coeff(P, K1.osc, E1.osc, m) + contraction_coeff(P, K2.osc, E1.osc, m);
    close_to(lhs, rhs, "1e-34");

    const Cplx sc = contraction_coeff(P, osc_scale(K1.osc, Real("1.75")), E1.osc, m);
    close_to(sc, Real("1.75") * contraction_coeff(P, K1.osc, E1.osc, m), "1e-34");

    // shifting the left argument by q^{sigma} scales gamma_m by q^{-sigma m}
    const Cplx sh = contraction_coeff(P, osc_shift(K1.osc, Cplx(Real("0.6"))), E1.osc, m);
    close_to(sh, P.qp(Real("-0.6") * Real(m)) * contraction_coeff(P, K1.osc, E1.osc, m),
             "1e-34");
}

TEST_CASE("product recognition on hand-built templates") {
    const QParams P = make_params(2);

    // gamma_m * m = 1  <=>  pairing function 1/(1-x)
    GammaTemplate g1;
    g1.num = sconst();
    const ProductForm pf1 = recognize_products(P, g1);
    for (const Cplx& x : {Cplx(Real("0.3")), Cplx(Real("0.2"), Real("0.55"))}) {
        close_to(pf_eval(P, pf1, x), Real(1) / (Real(1) - x), "1e-35");
    }

    // gamma_m * m = -q^{-rm}/(q^{rm} - q^{-rm})  <=>  1/(x; p)
    GammaTemplate g2;
    g2.num = sconst(Rat(-1), eneg(P.sl_r));
    g2.den = {P.sl_r};
    const ProductForm pf2 = recognize_products(P, g2);
    P.reset_tail();
    for (const Cplx& x : {Cplx(Real("0.4")), Cplx(Real("-0.25"), Real("0.1"))}) {
        close_to(pf_eval(P, pf2, x), Real(1) / poch(P, x, {P.p}), "1e-34");
    }

    // a negative denominator slope cannot come from a convergent product
    GammaTemplate g3;
    g3.num = sconst();
    g3.den = {eneg(P.sl_r)};
    CHECK_THROWS_AS(recognize_products(P, g3), std::domain_error);
}

TEST_CASE("pairing-function pole bookkeeping") {
    const QParams P = make_params(2);
    const auto E1 = current_E(P, 1);
    const auto F1 = current_F(P, 1);
    const ProductForm pf =
        recognize_products(P, contraction_template(P, E1.sym, F1.sym));
    const auto sing = pf_singular_exponents(P, pf);
    const ExpPair minus{Rat(-P.c_int), Rat(0)}, plus{Rat(P.c_int), Rat(0)};
    REQUIRE(sing.count(minus) == 1);
    REQUIRE(sing.count(plus) == 1);
    CHECK(sing.at(minus) == Rat(-1));
    CHECK(sing.at(plus) == Rat(-1));
    for (const auto& [e, o] : sing)
        if (o < 0) CHECK((e == minus || e == plus));

    // the regularized value at the simple pole is finite and nonzero
    P.reset_tail();
    const Cplx res = pf_eval_regularized(P, pf, P.qp(Real(-P.c_int)));
    CHECK(abs(res) > Real("1e-10"));
    CHECK(pf_min_radius(P, pf) > Real(0));
}

TEST_CASE("composition at a coincident point") {
    const QParams P = make_params(3);
    const auto E1 = current_E(P, 1);

    // regular composition point: profiles concatenate with the shift applied
    const ExpPair sig{Rat(5), Rat(0)};
    const VertexDescriptor out = specialize_compose(P, E1, E1, sig);
    const Cplx sig_val(P.rat(sig.a) + P.rat(sig.b) * P.rs);
    for (long m : {1L, 2L, 3L}) {
        const auto got = osc_coeffs(P, out.osc, m);
        const auto want = osc_coeffs(P, osc_concat(osc_shift(E1.osc, sig_val), E1.osc), m);
        REQUIRE(got.size() == want.size());
        for (const auto& [j, v] : want) close_to(got.at(j), v, "1e-34");
    }

    // a double pole of the pairing function blocks composition
    const auto Psi1 = current_Psi1(P);
    const auto PsiN = current_PsiN(P);
    CHECK_THROWS_AS(specialize_compose(P, Psi1, PsiN, ExpPair{Rat(P.N), Rat(2)}),
                    std::domain_error);

    // mixed-family rows keep incompatible denominators
    const auto F1 = current_F(P, 1);
    CHECK_THROWS_AS(specialize_compose(P, E1, F1, ExpPair{Rat(7), Rat(0)}),
                    std::domain_error);
}

TEST_CASE("relation comparison guards") {
    const QParams P = make_params(2);
    const auto one = [](const Cplx&, const Cplx&) { return Cplx(Real(1)); };
    const auto zero = [](const Cplx&, const Cplx&) { return Cplx(Real(0)); };
    CHECK_THROWS_AS(compare_structure_function(P, one, one, {}), std::invalid_argument);
    const std::vector<std::pair<Cplx, Cplx>> pts = {{Cplx(Real("0.1")), Cplx(Real("0.2"))}};
    CHECK_THROWS_AS(compare_structure_function(P, one, zero, pts), std::domain_error);
    const RelationOutcome ok = compare_structure_function(P, one, one, pts);
    CHECK(ok.max_residual == Real(0));
}
