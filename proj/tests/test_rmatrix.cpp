#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/qspecial.hpp"
#include "uqp/rmatrix.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace uqp;
using testutil::close_to;
using testutil::make_params;
using testutil::small;

TEST_CASE("frozen diagonal entry at rank 2") {
    const QParams P = make_params(2);
    const SVec svec = {{1, Real("2.1")}};
    const REntries e = rbar_entries(P, Real("0.3"), svec);
    const RKey key{{1, 2}, {1, 2}};
    REQUIRE(e.count(key) == 1);
    close_to(e.at(key),
             cplx_from_decimal("0.1582827161537054764295492511997975364143", "0"));

    // same entry from the printed bracket combination
    const Cplx want = bracket(P, Cplx(Real("3.1"))) * bracket(P, Cplx(Real("1.1"))) *
                      bracket(P, Cplx(Real("0.3"))) /
                      (bracket(P, Cplx(Real("2.1"))) * bracket(P, Cplx(Real("2.1"))) *
                       bracket(P, Cplx(Real("1.3"))));
    close_to(e.at(key), want, "1e-34");
}

TEST_CASE("entry families and dynamical dependence") {
    const QParams P = make_params(3);
    const SVec s1 = {{1, Real("1.7")}, {2, Real("2.4")}};
    const SVec s2 = {{1, Real("2.9")}, {2, Real("1.2")}};
    const REntries e1 = rbar_entries(P, Real("0.3"), s1);
    const REntries e2 = rbar_entries(P, Real("0.3"), s2);
    CHECK(e1.size() == 15);  // 2 N^2 - N
    CHECK(e2.size() == 15);

    // pure-transmission entries of the lower row are s-independent
    const RKey lower{{2, 1}, {2, 1}};
    close_to(e1.at(lower), e2.at(lower), "1e-35");
    // but the upper-row diagonal entries are not
    CHECK(abs(e1.at(RKey{{1, 2}, {1, 2}}) - e2.at(RKey{{1, 2}, {1, 2}})) > Real("1e-6"));

    // diagonal unit entries
    for (int j = 1; j <= 3; ++j)
        close_to(e1.at(RKey{{j, j}, {j, j}}), Cplx(Real(1)), "1e-36");
}

TEST_CASE("permutation at zero spectral parameter") {
    const QParams P = make_params(3);
    const SVec svec = {{1, Real("1.7")}, {2, Real("2.4")}};
    P.reset_tail();
    Real mx(0);
    for (const auto& [key, val] : rbar_entries(P, Real(0), svec)) {
        const auto& [out, in] = key;
        const bool swapped = out.first == in.second && out.second == in.first;
        const Real d = abs(val - Real(swapped ? 1 : 0));
        if (d > mx) mx = d;
    }
    small(mx, "1e-30");
}

TEST_CASE("degenerate dynamical point is rejected") {
    const QParams P = make_params(2);
    const SVec bad = {{1, Real(0)}};
    CHECK_THROWS_AS(rbar_entries(P, Real("0.3"), bad), std::domain_error);
}

TEST_CASE("shifted Yang-Baxter equation on three slots") {
    const QParams P = make_params(2);
    const SVec svec = {{1, Real("2.3")}};
    const Real u1("0.27"), u2("0.55"), u3("0.81");
    P.reset_tail();
    small(dybe_residual(P, u1, u2, u3, svec, 1), "1e-28");
    // the wrong shift direction breaks the equation decisively
    CHECK(dybe_residual(P, u1, u2, u3, svec, -1) > Real("1e-8"));
}

TEST_CASE("spectator shift convention") {
    const QParams P = make_params(3);
    const SVec svec = {{1, Real("1.7")}, {2, Real("2.4")}};
    // s_m += eps (delta_{a,m} - delta_{a,m+1})
    const SVec up = svec_shift(P, svec, 2, 1);
    close_to(up.at(1), svec.at(1) - Real(1), "1e-36");
    close_to(up.at(2), svec.at(2) + Real(1), "1e-36");
    const SVec edge = svec_shift(P, svec, 3, 1);
    close_to(edge.at(1), svec.at(1), "1e-36");
    close_to(edge.at(2), svec.at(2) - Real(1), "1e-36");
}
