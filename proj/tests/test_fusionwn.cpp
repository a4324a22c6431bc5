#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/fusionwn.hpp"
#include "uqp/modealg.hpp"
#include "uqp/qspecial.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace uqp;
using testutil::close_to;
using testutil::make_params;
using testutil::small;

TEST_CASE("fused-current term enumeration") {
    const QParams P = make_params(3);
    CHECK(build_Ttilde(P, 1).terms.size() == 3);  // C(3,1)
    CHECK(build_Ttilde(P, 2).terms.size() == 3);  // C(3,2)
    CHECK(build_Ttilde(P, 3).terms.size() == 1);  // C(3,3)
    CHECK_THROWS_AS(build_Ttilde(P, 0), std::out_of_range);
    CHECK_THROWS_AS(build_Ttilde(P, 4), std::out_of_range);

    const QParams P2 = make_params(2);
    CHECK(build_Ttilde(P2, 1).terms.size() == 2);
    CHECK(build_Ttilde(P2, 2).terms.size() == 1);

    // index tuples are strictly increasing; ladder steps down by 2 rstar units
    const FusedCurrent T2 = build_Ttilde(P, 2);
    for (const FusedTerm& t : T2.terms) {
        REQUIRE(t.indices.size() == 2);
        CHECK(t.indices[0] < t.indices[1]);
        REQUIRE(t.ladder.size() == 2);
        CHECK(t.ladder[0] == (ExpPair{Rat(0), Rat(1)}));
        CHECK(t.ladder[1] == (ExpPair{Rat(0), Rat(-1)}));
    }
}

TEST_CASE("fused profile carries the ladder shifts") {
    const QParams P = make_params(3);
    const FusedCurrent T3 = build_Ttilde(P, 3);
    const OscProfile prof = fused_osc_profile(P, T3.terms[0]);
    REQUIRE(prof.size() == 3);
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(prof[t].j == static_cast<int>(t) + 1);
        // sigma = (N - 1 - 2t) rstar
        close_to(prof[t].sigma, Cplx(Real(2 - 2 * static_cast<int>(t)) * P.rs), "1e-36");
    }
}

TEST_CASE("scattering factor reduces to the exchange kernel at width one") {
    for (int N : {2, 3}) {
        const QParams P = make_params(N);
        const Cplx x(Real("0.62"), Real("0.2"));
        P.reset_tail();
        small(abs(smatrix_factor(P, 1, 1, x) / phi_N(P, x) - Real(1)), "1e-34");

        // width (2,1): product of two kernel factors one rstar step apart
        const Cplx direct = phi_N(P, x * P.qp(P.rs)) * phi_N(P, x * P.qp(-P.rs));
        small(abs(smatrix_factor(P, 2, 1, x) / direct - Real(1)), "1e-34");
    }
}

TEST_CASE("scattering unitarity") {
    const QParams P = make_params(3);
    const Cplx x(Real("0.83"), Real("0.31"));
    P.reset_tail();
    Real mx(0);
    for (const auto& [n, m] : {std::pair<int, int>{1, 1}, {2, 1}, {2, 2}}) {
        const Real d =
            abs(smatrix_factor(P, n, m, x) * smatrix_factor(P, m, n, Real(1) / x) - Real(1));
        if (d > mx) mx = d;
    }
    small(mx, "1e-30");
}

TEST_CASE("unit-step ladder is annihilated by the weighted-sum constraint") {
    const QParams P = make_params(3);
    const FusedCurrent TN = build_Ttilde(P, 3);
    OscProfile unit = fused_osc_profile(P, TN.terms[0]);
    for (OscTerm& t : unit) t.sigma = Cplx(Real(P.N + 1 - 2 * t.j));
    const long m = 1;
    const auto cu = osc_coeffs(P, unit, m);
    for (int k = 1; k <= 3; ++k) {
        Cplx s(Real(0));
        Real scale(1);
        for (const auto& [j, c] : cu) {
            const Cplx term = c * B_commutator_value(P, j, k, m);
            s += term;
            if (abs(term) > scale) scale = abs(term);
        }
        small(abs(s) / scale, "1e-33");
    }
}

TEST_CASE("fused word accumulates every constituent's lattice content") {
    const QParams P = make_params(2);
    const FusedCurrent T2 = build_Ttilde(P, 2);
    const WordSignature s = normal_form(P, fused_word(P, T2.terms[0]), Cplx(Real(0)));
    Real mx(0);
    for (const Cplx& x : s.Psig)
        if (abs(x) > mx) mx = abs(x);
    CHECK(mx > Real("1e-10"));
}
