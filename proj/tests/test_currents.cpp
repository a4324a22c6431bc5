#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/currents.hpp"
#include "uqp/qspecial.hpp"

#include "test_util.hpp"

#include <stdexcept>
#include <variant>

using namespace uqp;
using testutil::close_to;
using testutil::make_params;
using testutil::small;

TEST_CASE("family index ranges") {
    const QParams P = make_params(3);
    CHECK_THROWS_AS(current_E(P, 0), std::out_of_range);
    CHECK_THROWS_AS(current_E(P, 3), std::out_of_range);  // E_j: j = 1..N-1
    CHECK_THROWS_AS(current_F(P, 3), std::out_of_range);
    CHECK_THROWS_AS(current_K(P, 0), std::out_of_range);
    CHECK_THROWS_AS(current_K(P, 4), std::out_of_range);  // K_j: j = 1..N
    CHECK_THROWS_AS(current_Lambda(P, 4), std::out_of_range);
    CHECK_THROWS_AS(current_H(P, 3, 1), std::out_of_range);  // H_j: j = 1..N-1
    CHECK_THROWS_AS(current_H(P, 1, 2), std::invalid_argument);
    (void)current_H(P, 1, -1);
    (void)current_E(P, 2);
}

TEST_CASE("basic-field oscillator coefficients") {
    const QParams P = make_params(3);
    // mode 1 of the j-th basic field sits on row j with weight q^r - q^{-r}
    for (int j = 1; j <= 3; ++j) {
        const auto cs = osc_coeffs(P, current_Lambda(P, j).osc, 1);
        REQUIRE(cs.size() == 1);
        close_to(cs.at(j), Cplx(P.qp(P.r) - P.qp(-P.r)), "1e-34");
    }
    // at mode m the weight becomes (q^{rm} - q^{-rm})/m
    const auto c3 = osc_coeffs(P, current_Lambda(P, 2).osc, 3);
    close_to(c3.at(2), Cplx((P.qp(Real(3) * P.r) - P.qp(Real(-3) * P.r)) / 3), "1e-34");
}

TEST_CASE("basic-field zero modes step by the starred nome") {
    const QParams P = make_params(3);
    const Cplx v(Real("0.3"));
    for (int j = 1; j <= 2; ++j) {
        const WordSignature a = normal_form(P, current_Lambda(P, j).word, v);
        const WordSignature b = normal_form(P, current_Lambda(P, j + 1).word, v);
        close_to(b.scalar / a.scalar, Cplx(Real(1) / P.ps), "1e-33");
    }
}

TEST_CASE("raising-current exchange against the elliptic ratio") {
    for (int N : {2, 3}) {
        const QParams P = make_params(N);
        const auto E1 = current_E(P, 1);
        const ExchangeFn f(P, E1, E1);
        P.reset_tail();
        Real mx(0);
        const std::pair<Cplx, Cplx> pts[] = {
            {Cplx(Real("0.41")), Cplx(Real("0.17"))},
            {Cplx(Real("0.13")), Cplx(Real("0.29"), Real("0.21"))},
        };
        for (const auto& [v1, v2] : pts) {
            const Cplx want =
                bracket_star(P, v1 - v2 + Real(1)) / bracket_star(P, v1 - v2 - Real(1));
            const Real d = abs(f(v1, v2) / want - Real(1));
            if (d > mx) mx = d;
        }
        small(mx, "1e-25");
    }
}

TEST_CASE("lowering-current exchange against the unstarred ratio") {
    const QParams P = make_params(2);
    const auto F1 = current_F(P, 1);
    const ExchangeFn f(P, F1, F1);
    const Cplx v1(Real("0.41")), v2(Real("0.17"));
    const Cplx want = bracket(P, v1 - v2 - Real(1)) / bracket(P, v1 - v2 + Real(1));
    P.reset_tail();
    small(abs(f(v1, v2) / want - Real(1)), "1e-25");
}

TEST_CASE("dressing-operator self exchange reproduces the archived values") {
    // ExchangeFn(PsiN, PsiN) at v1 - v2 = 0.24 equals mu_star(0.24)
    const QParams P2 = make_params(2);
    {
        const auto Psi = current_PsiN(P2);
        const ExchangeFn f(P2, Psi, Psi);
        close_to(f(Cplx(Real("0.5")), Cplx(Real("0.26"))),
                 cplx_from_decimal("-1.39715736285262498569216959188646527315", "0"),
                 "1e-30");
    }
    const QParams P3 = make_params(3);
    {
        const auto Psi = current_PsiN(P3);
        const ExchangeFn f(P3, Psi, Psi);
        close_to(f(Cplx(Real("0.5")), Cplx(Real("0.26"))),
                 cplx_from_decimal("-1.117961560666268819678208790870453249479", "0"),
                 "1e-30");
    }
}

TEST_CASE("halfway profile equals the dressing-ratio profile") {
    const QParams P = make_params(2);
    const int pm = 1;
    const Real sig = Real(P.N - 1) + Real(pm) * (P.r - P.c / 2);
    const OscProfile composed =
        osc_concat(osc_shift(current_K(P, 1).osc, Cplx(sig)),
                   osc_scale(osc_shift(current_K(P, 2).osc, Cplx(sig)), Real(-1)));
    const OscProfile direct = osc_k_difference(P, 1, Cplx(sig));
    Real mx(0);
    for (long m = -6; m <= 6; ++m) {
        if (m == 0) continue;
        const auto a = osc_coeffs(P, direct, m);
        const auto b = osc_coeffs(P, composed, m);
        Real sc(1);
        for (const auto& [j, x] : a)
            if (abs(x) > sc) sc = abs(x);
        for (const auto& [j, x] : a) {
            const Cplx bx = b.count(j) ? b.at(j) : Cplx(Real(0));
            const Real d = abs(x - bx) / sc;
            if (d > mx) mx = d;
        }
    }
    small(mx, "1e-30");
}

TEST_CASE("composite of raising and lowering currents stays finite at the pole") {
    const QParams P = make_params(2);
    const auto E1 = current_E(P, 1);
    const auto F1 = current_F(P, 1);
    const ProductForm pf =
        recognize_products(P, contraction_template(P, E1.sym, F1.sym));
    P.reset_tail();
    for (int pm : {1, -1}) {
        const Cplx x0 = P.qp(Real(-pm * P.c_int));
        CHECK(abs(pf_eval_regularized(P, pf, x0)) > Real("1e-10"));
    }
}
