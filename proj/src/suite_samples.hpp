#pragma once
// Shared sample plans for the exchange-relation suites.
//
// Four fixed argument pairs exercise real, complex, and negative-separation
// cases; randomized pairs are generated so that x = q^{2(v2-v1)} sweeps the
// moduli 0.7, 1.0, 1.3 (inside, on, and outside the unit circle, where the
// two orderings' series expansions converge in disjoint regions and only the
// recognized product forms can be compared) with phases kept a safe margin
// away from the positive real axis, where bracket zeros live.

#include "uqp/qparams.hpp"
#include "uqp/scalar.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace uqp {

inline std::vector<std::pair<Cplx, Cplx>> canonical_samples() {
    return {
        {Cplx(Real("0.41")), Cplx(Real("0.17"))},
        {Cplx(Real("0.13")), Cplx(Real("0.29"), Real("0.21"))},
        {Cplx(Real("0.37"), Real("-0.11")), Cplx(Real("0.54"))},
        {Cplx(Real("0.08")), Cplx(Real("-0.33"))},
    };
}

inline std::vector<std::pair<Cplx, Cplx>> relation_samples(const QParams& P, int count,
                                                           std::uint64_t seed) {
    std::vector<std::pair<Cplx, Cplx>> pts = canonical_samples();
    Rng rng(seed);
    const Real two_pi = 2 * pi_real();
    const char* mods[3] = {"0.7", "1.0", "1.3"};
    for (int i = 0; i < count; ++i) {
        const Real mod(mods[i % 3]);
        const Real phi = Real("0.15") + rng.uniform() * (two_pi - Real("0.3"));
        const Cplx v1(Real("0.1") + Real("0.45") * rng.uniform(),
                      Real("-0.15") + Real("0.3") * rng.uniform());
        const Cplx dv = Cplx(log(mod), phi) / (2 * P.L);
        pts.emplace_back(v1, v1 + dv);
    }
    return pts;
}

}  // namespace uqp
