#include "uqp/qparams.hpp"

#include <stdexcept>

namespace uqp {

QParams::QParams(const std::string& q_dec_, const std::string& r_dec_, int N_, int c_)
    : q_dec(q_dec_), r_dec(r_dec_), N(N_), c_int(c_) {
    if (N < 2) throw std::invalid_argument("parameter N: need an integer >= 2");
    if (c_int < 1) throw std::invalid_argument("parameter c: need a positive integer");
    q = real_from_decimal(q_dec);
    r = real_from_decimal(r_dec);
    if (!(q > 0 && q < 1)) throw std::invalid_argument("parameter q: need 0 < q < 1");
    c = Real(c_int);
    if (!(r > c)) throw std::invalid_argument("parameter r: need r > c");
    rs = r - c;
    L = log(q);
    p = exp(2 * r * L);
    ps = exp(2 * rs * L);
    QN = exp(2 * N * L);
    if (!(p > 0 && p < 1)) throw std::invalid_argument("parameter r: q^{2r} left (0,1)");
    if (!(ps > 0 && ps < 1)) throw std::invalid_argument("parameter r: q^{2(r-c)} left (0,1)");
    sl_r = {Rat(c_int), Rat(1)};
    sl_rs = {Rat(0), Rat(1)};
    sl_c = {Rat(c_int), Rat(0)};
    // one omitted product factor is (1 - w) with |w| below this threshold
    eps = ldexp(Real(1), -static_cast<long>(precision_bits() + 8));
    tail = Real(0);
}

Real QParams::rat(const Rat& x) const {
    return Real(x.numerator()) / Real(x.denominator());
}

Real QParams::qe(const ExpPair& e) const {
    return exp((rat(e.a) + rat(e.b) * rs) * L);
}

Real QParams::qp(const Real& e) const { return exp(e * L); }

Cplx QParams::qp(const Cplx& e) const { return exp(e * L); }

}  // namespace uqp
