// Mode-algebra suites: the constraint sum over the redundant oscillator
// family, commutator antisymmetry, and the linear solve recovering B-modes
// from the independent difference modes.

#include "uqp/modealg.hpp"
#include "uqp/qspecial.hpp"
#include "uqp/report.hpp"

#include <string>
#include <vector>

namespace uqp {
namespace {

void modes_consistency(const RunConfig& cfg, SuiteResult& sr) {
    for (int N : suite_Ns(cfg, {2, 3, 4})) {
        const QParams P(cfg.q, cfg.r, N, cfg.c);
        const std::string tag = " N=" + std::to_string(N);

        const ModeConsistency mc = consistency_check(P, 12);
        sr.check("constraint" + tag, mc.abs_residual, Real("1e-25"), Real(0),
                 "largest term " + sci(mc.max_term) + ", evaluated at " +
                     std::to_string(mc.bits_used) + " bits");

        Real mx(0);
        for (long m : {1L, 2L, 5L, -3L})
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k) {
                    const Real resid =
                        abs(B_commutator(P, j, k, m, -m) + B_commutator(P, k, j, -m, m));
                    if (resid > mx) mx = resid;
                }
        sr.check("antisymmetry" + tag, mx, Real("1e-25"));
    }
}

void modes_solve(const RunConfig& cfg, SuiteResult& sr) {
    const Real tol("1e-30");
    for (int N : suite_Ns(cfg, {2, 3, 4})) {
        const QParams P(cfg.q, cfg.r, N, cfg.c);
        const std::string tag = " N=" + std::to_string(N);
        Rng rng(derive_seed(cfg.seed, sr.suite) + static_cast<std::uint64_t>(N));

        Real mx_eq(0), mx_oracle(0);
        for (long m : {1L, 2L, -1L, 7L}) {
            const auto M = solve_B_from_b(P, m);
            const auto Mo = solve_B_from_b_oracle(P, m);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j + 1 < N; ++j) {
                    Real sc = abs(Mo[i][j]);
                    if (sc < 1) sc = Real(1);
                    const Real d = abs(M[i][j] - Mo[i][j]) / sc;
                    if (d > mx_oracle) mx_oracle = d;
                }

            // random difference modes; apply the map and verify the defining
            // rows and the constraint row directly
            std::vector<Real> b(static_cast<std::size_t>(N - 1));
            for (auto& bi : b) bi = 2 * rng.uniform() - 1;
            std::vector<Real> B(static_cast<std::size_t>(N), Real(0));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j + 1 < N; ++j)
                    B[static_cast<std::size_t>(i)] +=
                        M[i][j] * b[static_cast<std::size_t>(j)];

            const Real qm = qnum(P, Real(1), m);  // [m]_q
            for (int j = 1; j < N; ++j) {
                const Real rhs = Real(m) / qm * P.qp(Real((N - j) * m)) *
                                 b[static_cast<std::size_t>(j - 1)];
                const Real resid = abs(-B[static_cast<std::size_t>(j - 1)] +
                                       B[static_cast<std::size_t>(j)] - rhs);
                if (resid > mx_eq) mx_eq = resid;
            }
            Real constraint(0);
            for (int j = 1; j <= N; ++j)
                constraint += P.qp(Real(2 * j * m)) * B[static_cast<std::size_t>(j - 1)];
            if (abs(constraint) > mx_eq) mx_eq = abs(constraint);
        }
        sr.check("defining_rows" + tag, mx_eq, tol);
        sr.check("oracle_agreement" + tag, mx_oracle, tol);
    }
}

}  // namespace

void register_modes_suites() {
    register_suite("modes.consistency", modes_consistency);
    register_suite("modes.solve", modes_solve);
}

}  // namespace uqp
