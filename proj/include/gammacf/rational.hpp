#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gammacf {

// Exact rational number backed by GMP. Always canonical: gcd(num, den) = 1,
// den > 0. Serializes as "p/q" (or "p" when q = 1).
class rational {
  public:
    rational() { mpq_init(q_); }
    rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        mpq_init(q_);
        mpz_set_si(mpq_numref(q_), num);
        mpz_set_si(mpq_denref(q_), den);
        mpq_canonicalize(q_);  // also moves the sign to the numerator
    }
    explicit rational(const std::string& text) {
        mpq_init(q_);
        if (mpq_set_str(q_, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        }
        mpq_canonicalize(q_);
    }

    rational(const rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    rational(rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    rational& operator=(const rational& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    rational& operator=(rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~rational() { mpq_clear(q_); }

    rational& operator+=(const rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    rational& operator-=(const rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    rational& operator*=(const rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }
    rational operator-() const {
        rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const rational& a, const rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    rational abs() const {
        rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    rational inverse() const {
        if (is_zero()) throw std::domain_error("rational: division by zero");
        rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        rational r(1);
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), static_cast<unsigned long>(e));
        return r;  // canonical since the base is canonical
    }

    // Integer parts as rationals (exact, den = 1).
    rational numerator() const {
        rational r;
        mpq_set_z(r.q_, mpq_numref(q_));
        return r;
    }
    rational denominator() const {
        rational r;
        mpq_set_z(r.q_, mpq_denref(q_));
        return r;
    }

    // Rounds toward zero; valid only for values that fit a long.
    long to_long() const {
        mpz_t t;
        mpz_init(t);
        mpz_tdiv_q(t, mpq_numref(q_), mpq_denref(q_));
        if (!mpz_fits_slong_p(t)) {
            mpz_clear(t);
            throw std::overflow_error("rational: value does not fit long");
        }
        long v = mpz_get_si(t);
        mpz_clear(t);
        return v;
    }
    double to_double() const { return mpq_get_d(q_); }

    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.to_string();
    }

    const mpq_t& raw() const { return q_; }
    mpq_t& raw() { return q_; }

    friend rational gcd(const rational& a, const rational& b);
    friend std::optional<rational> sqrt_exact(const rational& v);

  private:
    mpq_t q_;
};

// Exact square root, or nullopt when v is not the square of a rational.
inline std::optional<rational> sqrt_exact(const rational& v) {
    if (v.sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(mpq_numref(v.q_)) == 0 ||
        mpz_perfect_square_p(mpq_denref(v.q_)) == 0)
        return std::nullopt;
    rational r;
    mpz_sqrt(mpq_numref(r.q_), mpq_numref(v.q_));
    mpz_sqrt(mpq_denref(r.q_), mpq_denref(v.q_));
    return r;  // canonical: num and den of v were coprime
}

// gcd of integer-valued rationals; used for polynomial content.
inline rational gcd(const rational& a, const rational& b) {
    if (!a.is_integer() || !b.is_integer())
        throw std::invalid_argument("gcd: arguments must be integers");
    rational r;
    mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
}

}  // namespace gammacf
