#include "rhxi/real.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace rhxi {

namespace {
mpfr_prec_t wider(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, other.prec());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() {
    mpfr_clear(v_);
}

Real Real::from_string(std::string_view s, mpfr_prec_t prec) {
    Real r(prec);
    std::string buf(s);
    char* end = nullptr;
    mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
    if (end == buf.c_str() || (end && *end != '\0'))
        throw std::invalid_argument("Real::from_string: unparsable number '" + buf + "'");
    return r;
}

Real Real::to_prec(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (digits < 2) digits = 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", digits, MPFR_RNDN, v_);
    return std::string(buf.data());
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& rhs) {
    if (rhs.prec() > prec()) return *this = *this + rhs;
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& rhs) {
    if (rhs.prec() > prec()) return *this = *this - rhs;
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& rhs) {
    if (rhs.prec() > prec()) return *this = *this * rhs;
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& rhs) {
    if (rhs.prec() > prec()) return *this = *this / rhs;
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

#define RHXI_BINOP(op, fn)                              \
    Real operator op(const Real& a, const Real& b) {    \
        Real r(wider(a, b));                            \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                \
        return r;                                       \
    }
RHXI_BINOP(+, mpfr_add)
RHXI_BINOP(-, mpfr_sub)
RHXI_BINOP(*, mpfr_mul)
RHXI_BINOP(/, mpfr_div)
#undef RHXI_BINOP

#define RHXI_BINOP_D(op, fn)                       \
    Real operator op(const Real& a, double b) {    \
        Real r(a.prec());                          \
        fn(r.v_, a.v_, b, MPFR_RNDN);              \
        return r;                                  \
    }
RHXI_BINOP_D(+, mpfr_add_d)
RHXI_BINOP_D(-, mpfr_sub_d)
RHXI_BINOP_D(*, mpfr_mul_d)
RHXI_BINOP_D(/, mpfr_div_d)
#undef RHXI_BINOP_D

Real operator+(double a, const Real& b) { return b + a; }
Real operator*(double a, const Real& b) { return b * a; }
Real operator-(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(double a, const Real& b) {
    Real r(b.prec());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define RHXI_UNFN(name, fn)          \
    Real name(const Real& x) {       \
        Real r(x.prec());            \
        fn(r.v_, x.v_, MPFR_RNDN);   \
        return r;                    \
    }
RHXI_UNFN(abs, mpfr_abs)
RHXI_UNFN(sqrt, mpfr_sqrt)
RHXI_UNFN(exp, mpfr_exp)
RHXI_UNFN(log, mpfr_log)
RHXI_UNFN(sin, mpfr_sin)
RHXI_UNFN(cos, mpfr_cos)
#undef RHXI_UNFN

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.v_, x.v_);
    return r;
}

std::pair<Real, Real> sin_cos(const Real& x) {
    Real s(x.prec()), c(x.prec());
    mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

Real atan2(const Real& y, const Real& x) {
    Real r(wider(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& exponent) {
    Real r(wider(base, exponent));
    mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
    return r;
}

Real pow_si(const Real& base, long exponent) {
    Real r(base.prec());
    mpfr_pow_si(r.v_, base.v_, exponent, MPFR_RNDN);
    return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::log2(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

Real Real::zeta_ui(unsigned long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_zeta_ui(r.v_, n, MPFR_RNDN);
    return r;
}

Real Real::factorial_ui(unsigned long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_fac_ui(r.v_, n, MPFR_RNDN);
    return r;
}

Real Real::gamma_real(const Real& x) {
    Real r(x.prec());
    mpfr_gamma(r.v_, x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace rhxi
