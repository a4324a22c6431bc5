#pragma once
// Heisenberg mode algebra at level one.
//
// The N coupled oscillator families B^j_m (j = 1..N, m a nonzero integer)
// have central pairwise commutators: [B^j_m, B^k_{m'}] vanishes unless
// m + m' = 0, and at m' = -m equals
//
//     m [rstar m][c m] / ([r m][m][N m])  *  [(N-1) m]                (j = k)
//     m [rstar m][c m] / ([r m][m][N m])  *  (-q^{-mN sgn(j-k)} [m])  (j != k)
//
// with [x] = [x]_q.  The family is redundant: the linear constraint
// sum_j q^{2jm} B^j_m = 0 holds for every m, and the N-1 independent
// combinations b_{j,m} = (B^{j+1}_m - B^j_m) q^{-(N-j)m} [m]/m generate it.
// solve_B_from_b inverts that relation (difference rows plus the constraint
// row); a Cramer-rule elimination provides an independent oracle.
//
// The constraint sum spans |m| * 2N orders of magnitude in q, so the
// consistency check raises the working precision internally to keep the
// *absolute* residual meaningful, and reports the precision it used.

#include "uqp/qparams.hpp"

#include <vector>

namespace uqp {

// central value of [B^j_m, B^k_{m'}]; zero unless m + m' = 0
Cplx B_commutator(const QParams& P, int j, int k, long m, long mprime);

// real-valued core at m' = -m (used by the contraction machinery)
Real B_commutator_value(const QParams& P, int j, int k, long m);

// N x (N-1) matrix mapping (b_{1,m}, ..., b_{N-1,m}) to (B^1_m, ..., B^N_m):
// rows solve  -B^j + B^{j+1} = (m/[m]) q^{(N-j)m} b_{j,m}  plus the constraint
// row  sum_j q^{2jm} B^j = 0.  Gaussian elimination with partial pivoting.
std::vector<std::vector<Real>> solve_B_from_b(const QParams& P, long m);

// same map by explicit Cramer determinants (independent oracle route)
std::vector<std::vector<Real>> solve_B_from_b_oracle(const QParams& P, long m);

struct ModeConsistency {
    Real abs_residual;   // max |sum_j q^{2jm} [B^j_m, B^k_{-m}]| over k and |m| <= m_max
    Real max_term;       // largest single term entering any of those sums
    unsigned bits_used;  // working precision the sums were evaluated at
};

// evaluates the constraint sums for |m| <= m_max at a precision high enough
// that the absolute residual is not limited by cancellation
ModeConsistency consistency_check(const QParams& P, long m_max);

// precision (binary digits) needed so that absolute residuals ~1e-25 survive
// the q^{+-2Nm} dynamic range of the constraint sums
unsigned elevated_bits_for_modes(const QParams& P, long m_max);

}  // namespace uqp
