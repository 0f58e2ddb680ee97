#include "rhxi/complex_value.hpp"

namespace rhxi {

ComplexValue& ComplexValue::operator+=(const ComplexValue& z) {
    re += z.re;
    im += z.im;
    return *this;
}

ComplexValue& ComplexValue::operator-=(const ComplexValue& z) {
    re -= z.re;
    im -= z.im;
    return *this;
}

ComplexValue& ComplexValue::operator*=(const ComplexValue& z) {
    *this = *this * z;
    return *this;
}

std::string ComplexValue::to_string(int digits) const {
    std::string s = re.to_string(digits);
    std::string i = im.to_string(digits);
    if (!i.empty() && i[0] != '-') s += "+";
    return s + i + "i";
}

ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
    return {a.re + b.re, a.im + b.im};
}
ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
    return {a.re - b.re, a.im - b.im};
}
ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexValue operator/(const ComplexValue& a, const ComplexValue& b) {
    Real d = norm_sq(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
ComplexValue operator+(const ComplexValue& a, const Real& b) { return {a.re + b, a.im}; }
ComplexValue operator-(const ComplexValue& a, const Real& b) { return {a.re - b, a.im}; }
ComplexValue operator*(const ComplexValue& a, const Real& b) { return {a.re * b, a.im * b}; }
ComplexValue operator/(const ComplexValue& a, const Real& b) { return {a.re / b, a.im / b}; }
ComplexValue operator+(const ComplexValue& a, double b) { return {a.re + b, a.im}; }
ComplexValue operator-(const ComplexValue& a, double b) { return {a.re - b, a.im}; }
ComplexValue operator*(const ComplexValue& a, double b) { return {a.re * b, a.im * b}; }

Real abs(const ComplexValue& z) {
    Real r(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Real norm_sq(const ComplexValue& z) {
    return z.re * z.re + z.im * z.im;
}

Real arg(const ComplexValue& z) {
    return atan2(z.im, z.re);
}

ComplexValue exp(const ComplexValue& z) {
    Real m = exp(z.re);
    auto [s, c] = sin_cos(z.im);
    return {m * c, m * s};
}

ComplexValue log(const ComplexValue& z) {
    return {log(abs(z)), arg(z)};
}

ComplexValue mul_i(const ComplexValue& z) {
    return {-z.im, z.re};
}

ComplexValue inv(const ComplexValue& z) {
    Real d = norm_sq(z);
    return {z.re / d, -z.im / d};
}

}  // namespace rhxi
