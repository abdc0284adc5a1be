#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace gammacf {

// Arbitrary-precision binary float backed by MPFR. Precision is carried per
// object as a count of decimal digits (>= 10); binary operations promote to
// the wider operand. Rounding is to nearest throughout.
class bigfloat {
  public:
    static constexpr long min_digits = 10;

    explicit bigfloat(long digits = 40) : digits_(clamp_digits(digits)) {
        mpfr_init2(x_, bits(digits_));
        mpfr_set_zero(x_, 1);
    }
    bigfloat(long value, long digits) : digits_(clamp_digits(digits)) {
        mpfr_init2(x_, bits(digits_));
        mpfr_set_si(x_, value, MPFR_RNDN);
    }
    bigfloat(const rational& value, long digits) : digits_(clamp_digits(digits)) {
        mpfr_init2(x_, bits(digits_));
        mpfr_set_q(x_, value.raw(), MPFR_RNDN);
    }
    bigfloat(const std::string& text, long digits) : digits_(clamp_digits(digits)) {
        mpfr_init2(x_, bits(digits_));
        if (mpfr_set_str(x_, text.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(x_);
            throw std::invalid_argument("bigfloat: cannot parse '" + text + "'");
        }
    }

    bigfloat(const bigfloat& o) : digits_(o.digits_) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    bigfloat(bigfloat&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    bigfloat& operator=(const bigfloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }
    bigfloat& operator=(bigfloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        digits_ = o.digits_;
        return *this;
    }
    ~bigfloat() { mpfr_clear(x_); }

    long digits() const { return digits_; }

    friend bigfloat operator+(const bigfloat& a, const bigfloat& b) {
        bigfloat r(std::max(a.digits_, b.digits_));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator-(const bigfloat& a, const bigfloat& b) {
        bigfloat r(std::max(a.digits_, b.digits_));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator*(const bigfloat& a, const bigfloat& b) {
        bigfloat r(std::max(a.digits_, b.digits_));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator/(const bigfloat& a, const bigfloat& b) {
        if (b.is_zero()) throw std::domain_error("bigfloat: division by zero");
        bigfloat r(std::max(a.digits_, b.digits_));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    bigfloat operator-() const {
        bigfloat r(*this);
        mpfr_neg(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    bigfloat& operator+=(const bigfloat& b) { return *this = *this + b; }
    bigfloat& operator-=(const bigfloat& b) { return *this = *this - b; }
    bigfloat& operator*=(const bigfloat& b) { return *this = *this * b; }
    bigfloat& operator/=(const bigfloat& b) { return *this = *this / b; }

    friend bool operator==(const bigfloat& a, const bigfloat& b) {
        return mpfr_cmp(a.x_, b.x_) == 0;
    }
    friend bool operator<(const bigfloat& a, const bigfloat& b) {
        return mpfr_cmp(a.x_, b.x_) < 0;
    }
    friend bool operator<=(const bigfloat& a, const bigfloat& b) {
        return mpfr_cmp(a.x_, b.x_) <= 0;
    }
    friend bool operator>(const bigfloat& a, const bigfloat& b) { return b < a; }
    friend bool operator>=(const bigfloat& a, const bigfloat& b) { return b <= a; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    bigfloat abs() const {
        bigfloat r(*this);
        mpfr_abs(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    bigfloat sqrt() const {
        if (sign() < 0) throw std::domain_error("bigfloat: sqrt of negative");
        bigfloat r(*this);
        mpfr_sqrt(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    bigfloat exp() const {
        bigfloat r(*this);
        mpfr_exp(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    bigfloat log() const {
        if (sign() <= 0) throw std::domain_error("bigfloat: log of nonpositive");
        bigfloat r(*this);
        mpfr_log(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    bigfloat pow(long e) const {
        bigfloat r(*this);
        mpfr_pow_si(r.x_, r.x_, e, MPFR_RNDN);
        return r;
    }
    // Scales by 2^e exactly; used to renormalize long products.
    bigfloat ldexp(long e) const {
        bigfloat r(*this);
        mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
        return r;
    }
    long exponent2() const {
        if (is_zero()) return 0;
        return static_cast<long>(mpfr_get_exp(x_));
    }

    static bigfloat pi(long digits) {
        bigfloat r(digits);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }
    static bigfloat infinity(long digits) {
        bigfloat r(digits);
        mpfr_set_inf(r.x_, 1);
        return r;
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    std::string to_string(long sig_digits = 0) const {
        if (sig_digits <= 0) sig_digits = digits_;
        if (is_zero()) return "0";
        mpfr_exp_t e10 = 0;
        char* s = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig_digits), x_,
                               MPFR_RNDN);
        std::string m(s);
        mpfr_free_str(s);
        std::string sgn;
        if (m[0] == '-') {
            sgn = "-";
            m.erase(0, 1);
        }
        while (m.size() > 1 && m.back() == '0') m.pop_back();
        std::string out = sgn + m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(static_cast<long>(e10) - 1);
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const bigfloat& v) {
        return os << v.to_string();
    }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    static mpfr_prec_t bits(long digits) {
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 32);
    }

  private:
    static long clamp_digits(long d) { return std::max(d, min_digits); }

    mpfr_t x_;
    long digits_;
};

inline bigfloat abs(const bigfloat& v) { return v.abs(); }
inline bigfloat sqrt(const bigfloat& v) { return v.sqrt(); }
inline bigfloat exp(const bigfloat& v) { return v.exp(); }
inline bigfloat log(const bigfloat& v) { return v.log(); }

}  // namespace gammacf
