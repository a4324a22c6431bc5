#pragma once
// High-precision scalar layer.
//
// Real is an MPFR-backed floating type whose working precision is set once per
// run (in binary digits) and is guaranteed never to fall below the request;
// Cplx is the matching complex type.  All math on these types resolves through
// ADL, so generic code should call exp/log/abs/sqrt unqualified.
//
// The header also provides deterministic number formatting for reports and a
// small deterministic pseudo-random source used by every randomized check, so
// that identical configuration and seed reproduce identical output bytes on
// any platform.

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace uqp {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Cplx = std::complex<Real>;

// --- precision control ------------------------------------------------------

// Set the working precision to at least `bits` binary digits (process-wide for
// subsequently constructed values).  Throws if the backend cannot honour the
// request; precision is never silently downgraded.
void set_precision_bits(unsigned bits);

// Binary digits actually carried by a freshly constructed Real.
unsigned precision_bits();

// Decimal digits of the current working precision (as configured).
unsigned precision_decimal_digits();

// Temporarily raise the working precision; never lowers it.  Restores the
// previous setting on destruction.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_decimal_digits_;
};

// --- constants and conversions ----------------------------------------------

Real pi_real();

inline Cplx to_cplx(const Real& re) { return Cplx(re, Real(0)); }

// z^n by binary powering (avoids the exp/log detour and its branch cuts)
Cplx powi(const Cplx& z, long n);

// Parse a decimal literal at the current working precision.
Real real_from_decimal(const std::string& s);
Cplx cplx_from_decimal(const std::string& re, const std::string& im);

// --- deterministic formatting ----------------------------------------------

// Scientific form with `sig` significant digits, e.g. "3.21e-27"; "0" for an
// exact zero.  Output depends only on the value, never on locale or platform.
std::string sci(const Real& x, unsigned sig = 3);

// Fixed-significant-digit decimal form of a real / complex value.
std::string decimal(const Real& x, unsigned sig = 40);
std::string decimal(const Cplx& z, unsigned sig = 40);

// --- deterministic uniform source -------------------------------------------

// SplitMix64; the double in [0,1) uses the top 53 bits.  Used instead of the
// standard distributions because their output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

}  // namespace uqp
