#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/qspecial.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace uqp;
using testutil::close_str;
using testutil::close_to;
using testutil::make_params;
using testutil::small;

// Frozen reference values (40 significant digits) computed with an
// independent arbitrary-precision implementation of the same definitions.

TEST_CASE("q-number and infinite products") {
    const QParams P = make_params(3);
    close_str(qnum(P, Cplx(Real(3))), "7.41");
    close_str(braces(P, Cplx(Real("0.2"))),
              "0.7993403926192539161795708393279747349054");

    // cutoff honesty: the reported tail bound dominates the actual truncation
    P.reset_tail();
    const PochResult full = pochhammer(P, Cplx(Real("0.2")), {P.ps, P.QN});
    const PochResult cut6 = pochhammer(P, Cplx(Real("0.2")), {P.ps, P.QN}, 6);
    const PochResult cut12 = pochhammer(P, Cplx(Real("0.2")), {P.ps, P.QN}, 12);
    CHECK(abs(cut6.value - full.value) <= cut6.bound);
    CHECK(abs(cut12.value - full.value) <= cut12.bound);
    CHECK(cut12.bound < cut6.bound);
    CHECK(full.bound < Real("1e-36"));

    CHECK_THROWS_AS(pochhammer(P, Cplx(Real("0.2")), {Real(1)}), std::domain_error);
    CHECK_THROWS_AS(pochhammer(P, Cplx(Real("0.2")), {Real("-0.1")}), std::domain_error);
}

TEST_CASE("theta function: value, zero, quasi-periodicity") {
    const QParams P = make_params(2);
    const Real base("0.1");
    close_str(theta(P, Cplx(Real("0.5")), base),
              "0.328867064096843015688992174700390880998");

    P.reset_tail();
    small(abs(theta(P, Cplx(Real(1)), base)), "1e-37");

    //  theta(b z) = -theta(z)/z
    const Cplx z(Real("0.41"), Real("0.18"));
    close_to(theta(P, base * z, base), -theta(P, z, base) / z, "1e-36");
    CHECK_THROWS_AS(theta(P, Cplx(Real(0)), base), std::domain_error);
}

TEST_CASE("elliptic brackets") {
    const QParams P = make_params(2);
    const Cplx v(Real("0.37"));
    close_str(bracket(P, v), "0.6774912233699421562200680838004861544565");
    close_str(bracket_star(P, v), "0.674934395846362471751859044822167622828");

    // oddness, period, and zero
    const Cplx w(Real("0.29"), Real("0.13"));
    P.reset_tail();
    small(abs(bracket(P, -w) + bracket(P, w)), "1e-36");
    small(abs(bracket_star(P, -w) + bracket_star(P, w)), "1e-36");
    small(abs(bracket(P, w + P.r) + bracket(P, w)), "1e-34");
    small(abs(bracket(P, Cplx(Real(0)))), "1e-37");
}

TEST_CASE("named structure constants at rank 2") {
    const QParams P = make_params(2);
    close_str(kappa(P), "1.000042702363990688865959886784109670183");
    close_str(rho_plus(P, Cplx(Real("0.23"))),
              "-0.5235553396324975036167832483371914258142");
    close_str(rho_ratio(P, Cplx(Real("0.23"))),
              "0.9936764415325171028131650096480604644666");
    close_str(g_N(P), "-0.1676916759404436723215207594394970042588");
    close_str(g_N_prime(P), "0.8386674416582807893942571834281532174286");
    close_str(C_n(P, 0), "-0.1676916759404436723215207594394970042588");
    close_str(C_n(P, 1), "-1.352961393636480552226793253397986892937");
    close_str(C_n(P, 2), "30.66604091421837807660320512839813664648");
    close_str(phi_N(P, Cplx(Real("0.6"), Real("0.1"))),
              "-0.002161361606611808137886489547873801163979",
              "-0.1188757714608231924657686120521985649695");
    close_str(mu_star(P, Cplx(Real("0.24"))),
              "-1.39715736285262498569216959188646527315");
}

TEST_CASE("named structure constants at rank 3") {
    const QParams P = make_params(3);
    close_str(rho_plus(P, Cplx(Real("0.23"))),
              "-0.3703375293087076279473197321197152327643");
    close_str(rho_ratio(P, Cplx(Real("0.23"))),
              "0.9915837746574809990639813742009917805798");
    close_str(g_N(P), "0", "-0.0177264212187382446675470043359847328775");
    close_str(g_N_prime(P), "0", "1.96118191480427135222225722993597235185");
    close_str(C_n(P, 1), "0", "-0.007757249186875188058967518547465928708201");
    close_str(C_n(P, 2), "0", "0.01486650297190771547033242952450811904508");
    close_str(C_n(P, 3), "0", "-0.03178038330403878698824124210469058418403");
    close_str(phi_N(P, Cplx(Real("0.6"), Real("0.1"))),
              "-0.005299259740571063430073019425758565873622",
              "-0.125863131224229704262287450849345219496");
    close_str(mu_star(P, Cplx(Real("0.24"))),
              "-1.117961560666268819678208790870453249479");

    // the braces route to the same exchange function
    const Cplx v(Real("0.19"), Real("0.07"));
    P.reset_tail();
    small(abs(mu_star(P, v) / mu_star_braces(P, v) - Real(1)), "1e-34");
}

TEST_CASE("phi_N unitarity and rho oddness structure") {
    for (int N : {2, 3}) {
        const QParams P = make_params(N);
        P.reset_tail();
        const Cplx z(Real("0.83"), Real("0.4"));
        small(abs(phi_N(P, z) * phi_N(P, Real(1) / z) - Real(1)), "1e-34");

        // starred and substituted readings of rho differ (the distinction is
        // load-bearing for the dressing-ratio exchange)
        const Cplx v(Real("0.23"));
        CHECK(abs(rho_ratio(P, v, true) - rho_ratio(P, v, false)) > Real("1e-8"));
    }
}

TEST_CASE("a second parameter point obeys the same identities") {
    const QParams P = make_params(2, "0.35", "5.7");
    const Cplx w(Real("0.31"), Real("0.09"));
    P.reset_tail();
    small(abs(bracket(P, -w) + bracket(P, w)), "1e-36");
    small(abs(bracket_star(P, w + P.rs) + bracket_star(P, w)), "1e-34");
    small(abs(phi_N(P, w + Real(1)) * phi_N(P, Real(1) / (w + Real(1))) - Real(1)), "1e-34");
    small(abs(theta(P, Cplx(Real(1)), P.p)), "1e-37");
}

TEST_CASE("contour norm of the bracket kernel") {
    const QParams P = make_params(2);
    const Real coarse = contour_norm_check(P, 256, false, Real("0.04"));
    const Real fine = contour_norm_check(P, 2048, false, Real("0.04"));
    const Real fine_star = contour_norm_check(P, 2048, true, Real("0.04"));
    small(fine, "1e-10");
    small(fine_star, "1e-10");
    // refinement helps unless the coarse grid already sits at the rounding floor
    CHECK((coarse < Real("1e-30") || fine <= coarse));
    CHECK_THROWS_AS(contour_norm_check(P, 4, false, Real("0.04")), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    set_precision_bits(128);
    CHECK_THROWS_AS(QParams("1.2", "6.3", 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(QParams("0.4", "0.5", 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(QParams("0.4", "6.3", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(QParams("0.4", "6.3", 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(QParams("-0.4", "6.3", 2, 1), std::invalid_argument);
}
