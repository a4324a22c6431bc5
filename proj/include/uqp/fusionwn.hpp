#pragma once
// Fused currents and bound-state scattering factors of the deformed W_N
// algebra sitting inside the level-one realization.
//
// The elementary factors are the Lambda_j currents (see currents.hpp); the
// level-n fused current is the C(N,n)-term sum
//
//   Ttilde_n(z) = sum_{1 <= j_1 < ... < j_n <= N}
//                   :Lambda_{j_1}(z q^{(n-1)r*}) ... Lambda_{j_n}(z q^{-(n-1)r*}):
//
// whose exchange with Ttilde_m produces the scalar factor
//
//   S_{n,m}(z) = prod_{k=1}^{n} prod_{l=1}^{m} phi_N(z q^{r*(n-m+2(l-k))}),
//
// term-independently (the same factor for every index choice), which is what
// turns the operator exchange into a genuine S-matrix relation.

#include "uqp/currents.hpp"
#include "uqp/qparams.hpp"
#include "uqp/rational.hpp"

#include <vector>

namespace uqp {

struct FusedTerm {
    std::vector<int> indices;     // strictly increasing Lambda indices j_1 < ... < j_n
    std::vector<ExpPair> ladder;  // t-th factor argument is z * q^{ladder[t]}
};

struct FusedCurrent {
    int n = 0;
    std::vector<FusedTerm> terms;
};

// throws std::out_of_range unless 1 <= n <= N
FusedCurrent build_Ttilde(const QParams& P, int n);

// oscillator profile of a single fused term: the sum of its ladder-shifted
// Lambda rows
OscProfile fused_osc_profile(const QParams& P, const FusedTerm& term);

// zero-mode word of a single fused term; the Lambda words carry no argument
// power, so the ladder does not enter here
ZeroModeWord fused_word(const QParams& P, const FusedTerm& term);

// printed double-product S-matrix factor
Cplx smatrix_factor(const QParams& P, int n, int m, const Cplx& z);

}  // namespace uqp
