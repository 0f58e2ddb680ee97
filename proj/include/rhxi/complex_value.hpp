#pragma once

#include "rhxi/real.hpp"

#include <string>
#include <utility>

namespace rhxi {

// High-precision complex number; backend-agnostic semantic type.
// Finite parts are an invariant of every published result (NaN/infinity are
// error states and surface as exceptions, never as stored values).
struct ComplexValue {
    Real re;
    Real im;

    explicit ComplexValue(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexValue(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    ComplexValue(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ComplexValue conj() const { return {re, -im}; }
    ComplexValue operator-() const { return {-re, -im}; }

    ComplexValue& operator+=(const ComplexValue& z);
    ComplexValue& operator-=(const ComplexValue& z);
    ComplexValue& operator*=(const ComplexValue& z);

    std::string to_string(int digits) const;
};

ComplexValue operator+(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator-(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator*(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator/(const ComplexValue& a, const ComplexValue& b);
ComplexValue operator+(const ComplexValue& a, const Real& b);
ComplexValue operator-(const ComplexValue& a, const Real& b);
ComplexValue operator*(const ComplexValue& a, const Real& b);
ComplexValue operator/(const ComplexValue& a, const Real& b);
ComplexValue operator+(const ComplexValue& a, double b);
ComplexValue operator-(const ComplexValue& a, double b);
ComplexValue operator*(const ComplexValue& a, double b);

Real abs(const ComplexValue& z);
Real norm_sq(const ComplexValue& z);
Real arg(const ComplexValue& z);
ComplexValue exp(const ComplexValue& z);
// Principal branch, imaginary part in (-pi, pi].
ComplexValue log(const ComplexValue& z);
ComplexValue mul_i(const ComplexValue& z);
ComplexValue inv(const ComplexValue& z);

}  // namespace rhxi
