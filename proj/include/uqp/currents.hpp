#pragma once
// The catalog of level-one vertex operators.
//
// For rank N-1 there are screening-type currents E_j, F_j (j = 1..N-1), the
// dressing currents K_j (j = 1..N), the level-(N-1) highest and lowest
// weight dressing operators (denoted PsiN and Psi1 here), the halfway
// currents H_j^{+-} arising at the delta-function support of the E-F
// operator product, and the fused building blocks Lambda_j of the deformed
// W-algebra generators.  Each builder returns the full descriptor: symbolic
// oscillator profile, numeric oscillator profile, and zero-mode word.

#include "uqp/opecalc.hpp"

namespace uqp {

VertexDescriptor current_E(const QParams& P, int j);     // j = 1..N-1
VertexDescriptor current_F(const QParams& P, int j);     // j = 1..N-1
VertexDescriptor current_K(const QParams& P, int j);     // j = 1..N
VertexDescriptor current_PsiN(const QParams& P);
VertexDescriptor current_Psi1(const QParams& P);
VertexDescriptor current_Lambda(const QParams& P, int j);  // j = 1..N

// halfway current H_j^{pm} (pm = +1 / -1); its oscillator content is the
// k_j / k_{j+1} difference at argument shift q^{N-j + pm(r - c/2)}
VertexDescriptor current_H(const QParams& P, int j, int pm);

// numeric k-difference profile: rows j (+) and j+1 (-) of the dressing
// oscillator coefficient at a common argument shift
OscProfile osc_k_difference(const QParams& P, int j, const Cplx& sigma);

}  // namespace uqp
