#pragma once
// Dynamical R-matrix in the elliptic-bracket normalization.
//
// The nonzero entries of the normalized R-matrix R(u, s) on C^N x C^N, with
// dynamical parameters s_1..s_{N-1} and s_{j,l} = s_j + ... + s_{l-1}:
//
//   ((j,j),(j,j)) = 1
//   ((j,l),(j,l)) = [s+1][s-1][u] / ([s]^2 [u+1])        (j < l, s = s_{j,l})
//   ((l,j),(l,j)) = [u] / [u+1]                          (s-independent)
//   ((j,l),(l,j)) = [1][s+u] / ([s][u+1])
//   ((l,j),(j,l)) = [1][s-u] / ([s][u+1])
//
// At u = 0 the diagonal b-type entries vanish and the exchange entries are 1,
// so R(0, s) is the permutation matrix.  The dynamical Yang-Baxter equation
// holds with the shift convention  s_m -> s_m + eps (delta_{a,m} -
// delta_{a,m+1})  for a spectator state a and eps = +1; the opposite sign is
// kept as a configurable negative control.

#include "uqp/qparams.hpp"

#include <map>
#include <vector>

namespace uqp {

using RKey = std::pair<std::pair<int, int>, std::pair<int, int>>;  // ((out1,out2),(in1,in2))
using REntries = std::map<RKey, Cplx>;

// dynamical parameters: svec[m] for m = 1..N-1
using SVec = std::map<int, Real>;

// throws std::domain_error if some bracket [s_{j,l}] is numerically zero
// (degenerate dynamical point)
REntries rbar_entries(const QParams& P, const Real& u, const SVec& svec);

SVec svec_shift(const QParams& P, const SVec& svec, int a, int eps);

// sparse N^3 x N^3 matrix in column-major adjacency form
struct SparseMat {
    int dim = 0;
    std::vector<std::vector<std::pair<int, Cplx>>> cols;
};

// R acting on tensor slots `slots` of C^N otimes 3, with the dynamical
// parameter shifted by the weight of the state in `shift_slot` (0 = none)
SparseMat rmat3(const QParams& P, const Real& u, const SVec& svec, std::pair<int, int> slots,
                int shift_slot = 0, int shift_eps = 1);

SparseMat matmul(const SparseMat& A, const SparseMat& B);

// relative max-norm deviation of the two triple products of the dynamical
// Yang-Baxter equation
Real dybe_residual(const QParams& P, const Real& u1, const Real& u2, const Real& u3,
                   const SVec& svec, int eps);

}  // namespace uqp
