#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace rhxi {

// Arbitrary-precision real number. Thin RAII wrapper over mpfr_t with the
// precision carried per value; binary operations round to the wider of the
// two operand precisions (MPFR_RNDN everywhere).
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(double x, mpfr_prec_t prec);
    Real(long x, mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_string(std::string_view s, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    // Round-trips through a new precision (used when widening inputs).
    Real to_prec(mpfr_prec_t prec) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Shortest decimal form with the given significant digit count.
    std::string to_string(int digits) const;

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Raw handle for the few call sites that talk to mpfr directly.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, double b);
    friend Real operator-(const Real& a, double b);
    friend Real operator*(const Real& a, double b);
    friend Real operator/(const Real& a, double b);
    friend Real operator+(double a, const Real& b);
    friend Real operator-(double a, const Real& b);
    friend Real operator*(double a, const Real& b);
    friend Real operator/(double a, const Real& b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

    friend Real abs(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real exp(const Real& x);
    friend Real log(const Real& x);
    friend Real sin(const Real& x);
    friend Real cos(const Real& x);
    friend std::pair<Real, Real> sin_cos(const Real& x);
    friend Real atan2(const Real& y, const Real& x);
    friend Real pow(const Real& base, const Real& exponent);
    friend Real pow_si(const Real& base, long exponent);
    friend Real floor(const Real& x);
    friend Real min(const Real& a, const Real& b);
    friend Real max(const Real& a, const Real& b);

    static Real pi(mpfr_prec_t prec);
    static Real log2(mpfr_prec_t prec);
    // Exact library evaluations used for Bernoulli numbers and constants.
    static Real zeta_ui(unsigned long n, mpfr_prec_t prec);
    static Real factorial_ui(unsigned long n, mpfr_prec_t prec);
    static Real gamma_real(const Real& x);

  private:
    mpfr_t v_;
};

}  // namespace rhxi
