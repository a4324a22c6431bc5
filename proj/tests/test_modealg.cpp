#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/modealg.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace uqp;
using testutil::close_to;
using testutil::make_params;
using testutil::small;

TEST_CASE("frozen commutator values") {
    const QParams P2 = make_params(2);
    close_to(B_commutator_value(P2, 1, 1, 1),
             real_from_decimal("0.1379240234597505555942954640841746841201"));
    close_to(B_commutator_value(P2, 1, 2, 1),
             real_from_decimal("-0.02206784375356008889508727425346794945921"));
    const QParams P3 = make_params(3);
    close_to(B_commutator_value(P3, 3, 3, 2),
             real_from_decimal("0.05116730383035324406874362829455445412665"));
    close_to(B_commutator_value(P3, 1, 3, -1),
             real_from_decimal("0.8434119180863626248807710143473907387572"));
}

TEST_CASE("mode-index delta and antisymmetry") {
    const QParams P = make_params(3);
    CHECK(B_commutator(P, 1, 2, 1, 2) == Cplx(Real(0)));
    CHECK(B_commutator(P, 1, 2, 3, -2) == Cplx(Real(0)));
    Real mx(0);
    for (long m : {1L, 2L, 5L, -3L})
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                const Real d =
                    abs(B_commutator(P, j, k, m, -m) + B_commutator(P, k, j, -m, m));
                if (d > mx) mx = d;
            }
    small(mx, "1e-30");
}

TEST_CASE("row-offset symmetry") {
    // off-diagonal values depend on the rows only through sgn(j - k)
    const QParams P = make_params(3);
    for (long m : {1L, -2L}) {
        close_to(B_commutator_value(P, 1, 2, m), B_commutator_value(P, 2, 3, m), "1e-36");
        close_to(B_commutator_value(P, 1, 3, m), B_commutator_value(P, 2, 3, m), "1e-36");
        close_to(B_commutator_value(P, 2, 1, m), B_commutator_value(P, 3, 1, m), "1e-36");
    }
}

TEST_CASE("weighted-sum constraint across ranks") {
    for (int N : {2, 3, 4}) {
        const QParams P = make_params(N);
        const ModeConsistency mc = consistency_check(P, 6);
        small(mc.abs_residual, "1e-25");
        CHECK(mc.bits_used >= precision_bits());
        CHECK(elevated_bits_for_modes(P, 12) > 128u);
    }
}

TEST_CASE("linear solve agrees with the elimination oracle") {
    for (int N : {2, 3}) {
        const QParams P = make_params(N);
        for (long m : {1L, 2L, -1L, 7L}) {
            const auto M = solve_B_from_b(P, m);
            const auto Mo = solve_B_from_b_oracle(P, m);
            REQUIRE(M.size() == Mo.size());
            Real mx(0);
            for (std::size_t i = 0; i < M.size(); ++i) {
                REQUIRE(M[i].size() == Mo[i].size());
                for (std::size_t j = 0; j < M[i].size(); ++j) {
                    Real sc = abs(Mo[i][j]);
                    if (sc < 1) sc = Real(1);
                    const Real d = abs(M[i][j] - Mo[i][j]) / sc;
                    if (d > mx) mx = d;
                }
            }
            small(mx, "1e-33");
        }
    }
}

TEST_CASE("error handling") {
    const QParams P = make_params(2);
    CHECK_THROWS_AS(B_commutator_value(P, 0, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(B_commutator_value(P, 1, 3, 1), std::out_of_range);
    CHECK_THROWS_AS(B_commutator_value(P, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(solve_B_from_b(P, 0), std::invalid_argument);
    CHECK_THROWS_AS(solve_B_from_b_oracle(P, 0), std::invalid_argument);
}
