#include "uqp/scalar.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>

namespace uqp {

namespace {

// decimal digits that guarantee at least `bits` binary digits:
// bits * log10(2) rounded up, plus a little slack
unsigned decimal_digits_for_bits(unsigned bits) {
    return static_cast<unsigned>((static_cast<unsigned long long>(bits) * 301ULL) / 1000ULL) + 3U;
}

}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 24) throw std::invalid_argument("precision: need at least 24 binary digits");
    const unsigned d10 = decimal_digits_for_bits(bits);
    Real::default_precision(d10);
    Real probe(0);
    const auto got = mpfr_get_prec(probe.backend().data());
    if (got < static_cast<mpfr_prec_t>(bits))
        throw std::runtime_error("precision: backend provided fewer binary digits than requested");
}

unsigned precision_bits() {
    Real probe(0);
    return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

unsigned precision_decimal_digits() { return Real::default_precision(); }

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_decimal_digits_(Real::default_precision()) {
    const unsigned d10 = decimal_digits_for_bits(bits);
    if (d10 > saved_decimal_digits_) set_precision_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_decimal_digits_); }

Real pi_real() {
    Real x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

Cplx powi(const Cplx& z, long n) {
    if (n < 0) return Cplx(Real(1), Real(0)) / powi(z, -n);
    Cplx acc(Real(1), Real(0));
    Cplx base = z;
    unsigned long m = static_cast<unsigned long>(n);
    while (m) {
        if (m & 1UL) acc *= base;
        base *= base;
        m >>= 1;
    }
    return acc;
}

Real real_from_decimal(const std::string& s) { return Real(s); }

Cplx cplx_from_decimal(const std::string& re, const std::string& im) {
    return Cplx(Real(re), Real(im));
}

std::string sci(const Real& x, unsigned sig) {
    if (x == 0) return "0";
    return x.str(static_cast<int>(sig), std::ios_base::scientific);
}

std::string decimal(const Real& x, unsigned sig) {
    if (x == 0) return "0";
    return x.str(static_cast<int>(sig), std::ios_base::scientific);
}

std::string decimal(const Cplx& z, unsigned sig) {
    std::ostringstream os;
    os << decimal(z.real(), sig);
    if (z.imag() != 0) {
        os << (z.imag() > 0 ? " + " : " - ") << decimal(abs(z.imag()), sig) << "i";
    }
    return os.str();
}

}  // namespace uqp
