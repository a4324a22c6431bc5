#pragma once
// Exact rational bookkeeping for q-exponents.
//
// Every exponent that appears in a structure-function template is an affine
// form  a + b*rstar  with rational a, b (rstar = r - c is the shifted level
// parameter).  Keeping these forms exact lets the product recognizer and the
// pole bookkeeping work by exact key comparison instead of floating-point
// matching.

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace uqp {

using Rat = boost::rational<long long>;

inline int sgn(long long a) { return (a > 0) - (a < 0); }

// exponent  a + b * rstar, as a power of q
struct ExpPair {
    Rat a{0};
    Rat b{0};
    friend bool operator==(const ExpPair&, const ExpPair&) = default;
};

inline ExpPair eadd(const ExpPair& x, const ExpPair& y) { return {x.a + y.a, x.b + y.b}; }
inline ExpPair esub(const ExpPair& x, const ExpPair& y) { return {x.a - y.a, x.b - y.b}; }
inline ExpPair eneg(const ExpPair& x) { return {-x.a, -x.b}; }
inline ExpPair escale(const ExpPair& x, const Rat& c) { return {x.a * c, x.b * c}; }

// Canonical exponent order: by the rstar slope first, then the constant part.
// "Largest" under this order is the exponent whose numerical magnitude
// dominates as rstar grows, which is what exact division peels off first.
struct ExpKeyLess {
    bool operator()(const ExpPair& x, const ExpPair& y) const {
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    }
};

inline bool exp_vec_less(const std::vector<ExpPair>& x, const std::vector<ExpPair>& y) {
    ExpKeyLess lt;
    const std::size_t n = x.size() < y.size() ? x.size() : y.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (lt(x[i], y[i])) return true;
        if (lt(y[i], x[i])) return false;
    }
    return x.size() < y.size();
}

}  // namespace uqp
