#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "polynomial.hpp"
#include "rational.hpp"

namespace gammacf {

// Element of Q(x) in canonical form: gcd(num, den) = 1 and den is monic, so
// structural equality is value equality and (2x)/4 normalizes to (1/2 x)/1.
class rational_function {
  public:
    using poly = polynomial<rational>;

    rational_function() : num_{}, den_{rational(1)} {}
    rational_function(rational constant) : num_{std::move(constant)}, den_{rational(1)} {}
    rational_function(poly numerator) : num_(std::move(numerator)), den_{rational(1)} {}
    rational_function(poly numerator, poly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::domain_error("rational_function: zero denominator");
        reduce();
    }

    static rational_function x() { return rational_function(poly::x()); }

    const poly& num() const { return num_; }
    const poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    // Valid only for constants.
    rational constant() const {
        if (!is_constant())
            throw std::domain_error("rational_function: not a constant");
        return num_.coeff(0);
    }

    friend rational_function operator+(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator-(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational_function operator*(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational_function operator/(const rational_function& a, const rational_function& b) {
        if (b.is_zero()) throw std::domain_error("rational_function: division by zero");
        return rational_function(a.num_ * b.den_, a.den_ * b.num_);
    }
    rational_function operator-() const {
        rational_function r(*this);
        r.num_ = -r.num_;
        return r;
    }
    rational_function& operator+=(const rational_function& o) { return *this = *this + o; }
    rational_function& operator-=(const rational_function& o) { return *this = *this - o; }
    rational_function& operator*=(const rational_function& o) { return *this = *this * o; }
    rational_function& operator/=(const rational_function& o) { return *this = *this / o; }

    friend bool operator==(const rational_function& a, const rational_function& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Evaluation at a scalar; throws on a pole. The lift converts rational
    // coefficients into F.
    template <class F, class Lift>
    F eval(const F& x, Lift lift) const {
        F d = den_.eval(x, lift);
        if (d == x - x) throw std::domain_error("rational_function: pole at evaluation point");
        return num_.eval(x, lift) / d;
    }
    rational eval(const rational& x) const {
        return eval(x, [](const rational& c) { return c; });
    }

    // f(x + h)
    rational_function shift(const rational& h) const {
        return rational_function(num_.shift(h), den_.shift(h));
    }

    std::string to_string(const std::string& var = "x") const {
        std::string n = num_.to_string(var);
        if (den_ == poly{rational(1)}) return n;
        bool wrap_n = num_.degree() > 0;
        bool wrap_d = den_.degree() > 0;
        std::string out = wrap_n ? "(" + n + ")" : n;
        out += " / ";
        std::string d = den_.to_string(var);
        out += wrap_d ? "(" + d + ")" : d;
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const rational_function& f) {
        return os << f.to_string();
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = poly{rational(1)};
            return;
        }
        poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide(num_, g).first;
            den_ = divide(den_, g).first;
        }
        rational lc = den_.leading();
        if (!(lc == rational(1))) {
            rational inv = lc.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    poly num_;
    poly den_;
};

// Exact square root, or nullopt. The denominator is monic, so both parts
// must be perfect squares on their own.
inline std::optional<rational_function> sqrt_exact(const rational_function& f) {
    auto n = sqrt_exact(f.num());
    if (!n) return std::nullopt;
    auto d = sqrt_exact(f.den());
    if (!d) return std::nullopt;
    return rational_function(*n, *d);
}

}  // namespace gammacf
