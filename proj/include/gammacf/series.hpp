#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace gammacf {

// Truncated asymptotic series at x = infinity with exact rational
// coefficients: sum of c_j * x^(-j) for j0 <= j <= T. Exponents may be
// negative, so polynomials embed exactly. T is the last exponent whose
// coefficient is known; every operation propagates the tightest T it can
// justify for its result, never widening knowledge it does not have.
class series1x {
  public:
    series1x() : j0_(1), T_(0) {}  // empty: knows nothing

    static series1x zero(long T) {
        series1x s;
        s.j0_ = T + 1;
        s.T_ = T;
        return s;
    }

    static series1x from_poly(const polynomial<rational>& p, long T) {
        series1x s = zero(T);
        for (long k = 0; k <= p.degree(); ++k) s.set(-k, p.coeff(k));
        return s;
    }

    // Series with coefficient coeffs[i] at x^-(j0+i), known through T.
    static series1x from_coeffs(long j0, std::vector<rational> coeffs, long T) {
        series1x s = zero(T);
        for (size_t i = 0; i < coeffs.size(); ++i)
            s.set(j0 + static_cast<long>(i), std::move(coeffs[i]));
        return s;
    }

    long truncation() const { return T_; }
    // Lowest exponent with a nonzero coefficient, if any is known.
    std::optional<long> valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return j0_ + static_cast<long>(i);
        return std::nullopt;
    }
    bool known(long j) const { return j <= T_; }
    rational coeff(long j) const {
        if (j > T_)
            throw config_error("series: coefficient of x^-" + std::to_string(j) +
                               " beyond truncation " + std::to_string(T_));
        if (j < j0_ || j >= j0_ + static_cast<long>(c_.size())) return rational(0);
        return c_[static_cast<size_t>(j - j0_)];
    }

    friend series1x operator+(const series1x& a, const series1x& b) {
        long T = std::min(a.T_, b.T_);
        series1x r = zero(T);
        long lo = std::min(a.j0_, b.j0_);
        for (long j = lo; j <= T; ++j) r.set(j, a.at(j) + b.at(j));
        return r;
    }
    friend series1x operator-(const series1x& a, const series1x& b) {
        return a + (rational(-1) * b);
    }
    friend series1x operator*(const rational& s, const series1x& a) {
        series1x r = a;
        for (auto& v : r.c_) v = s * v;
        return r;
    }

    friend series1x operator*(const series1x& a, const series1x& b) {
        long va = a.valuation().value_or(a.T_ + 1);
        long vb = b.valuation().value_or(b.T_ + 1);
        long T = std::min(a.T_ + vb, b.T_ + va);
        series1x r = zero(T);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                long e = a.j0_ + static_cast<long>(i) + b.j0_ + static_cast<long>(j);
                if (e > T) continue;
                r.set(e, r.at(e) + a.c_[i] * b.c_[j]);
            }
        }
        return r;
    }

    // Multiplicative inverse. With valuation v and truncation T the result is
    // known through T - 2v.
    series1x inverse() const {
        auto v = valuation();
        if (!v) throw division_by_zero_series();
        rational lead = at(*v);
        long R = T_ - *v;  // relative orders of (1 + u) available
        // u = f / (lead * x^-v) - 1, valuation >= 1 in relative exponent
        std::vector<rational> u(static_cast<size_t>(R) + 1, rational(0));
        for (long r = 1; r <= R; ++r) u[static_cast<size_t>(r)] = at(*v + r) / lead;
        std::vector<rational> inv = geometric(u, R);
        series1x out = zero(T_ - 2 * *v);
        for (long r = 0; r <= R; ++r) {
            long e = -*v + r;
            if (e <= out.T_) out.set(e, inv[static_cast<size_t>(r)] / lead);
        }
        return out;
    }

    // log of a series of the form 1 + (terms with positive exponent).
    series1x log() const {
        if (!(at(0) == rational(1)))
            throw not_log_normalized();
        for (long j = std::min(j0_, 0L); j < 0; ++j)
            if (!at(j).is_zero()) throw not_log_normalized();
        long R = T_;
        std::vector<rational> u(static_cast<size_t>(R) + 1, rational(0));
        for (long r = 1; r <= R; ++r) u[static_cast<size_t>(r)] = at(r);
        // ln(1+u) = u - u^2/2 + u^3/3 - ...
        std::vector<rational> acc(u.size(), rational(0));
        std::vector<rational> upow = u;
        for (long k = 1; k <= R; ++k) {
            rational f(((k % 2) ? 1 : -1), k);
            bool any = false;
            for (size_t i = 0; i < upow.size(); ++i) {
                if (upow[i].is_zero()) continue;
                acc[i] += f * upow[i];
                any = true;
            }
            if (!any) break;
            if (k < R) upow = convolve(upow, u, R);
        }
        series1x out = zero(T_);
        for (long r = 1; r <= R; ++r) out.set(r, acc[static_cast<size_t>(r)]);
        return out;
    }

    std::string to_string() const {
        std::string out;
        for (long j = j0_; j <= T_; ++j) {
            rational v = at(j);
            if (v.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += v.to_string() + "*x^" + std::to_string(-j);
        }
        if (out.empty()) out = "0";
        return out + " + O(x^" + std::to_string(-(T_ + 1)) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const series1x& s) {
        return os << s.to_string();
    }

  private:
    rational at(long j) const {
        if (j < j0_ || j >= j0_ + static_cast<long>(c_.size())) return rational(0);
        return c_[static_cast<size_t>(j - j0_)];
    }
    void set(long j, rational v) {
        if (j > T_) return;
        if (c_.empty()) {
            j0_ = j;
            c_.push_back(std::move(v));
            return;
        }
        if (j < j0_) {
            c_.insert(c_.begin(), static_cast<size_t>(j0_ - j), rational(0));
            j0_ = j;
        } else if (j >= j0_ + static_cast<long>(c_.size())) {
            c_.resize(static_cast<size_t>(j - j0_) + 1, rational(0));
        }
        c_[static_cast<size_t>(j - j0_)] = std::move(v);
    }

    // 1/(1+u) through relative order R, u given by relative coefficients.
    static std::vector<rational> geometric(const std::vector<rational>& u, long R) {
        std::vector<rational> acc(static_cast<size_t>(R) + 1, rational(0));
        acc[0] = rational(1);
        std::vector<rational> upow(acc.size(), rational(0));
        upow[0] = rational(1);
        for (long k = 1; k <= R; ++k) {
            upow = convolve(upow, u, R);
            bool any = false;
            rational sgn((k % 2) ? -1 : 1);
            for (size_t i = 0; i < upow.size(); ++i) {
                if (upow[i].is_zero()) continue;
                acc[i] += sgn * upow[i];
                any = true;
            }
            if (!any) break;
        }
        return acc;
    }
    static std::vector<rational> convolve(const std::vector<rational>& a,
                                          const std::vector<rational>& b, long R) {
        std::vector<rational> c(static_cast<size_t>(R) + 1, rational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size() && i + j < c.size(); ++j)
                c[i + j] += a[i] * b[j];
        }
        return c;
    }

    long j0_;
    std::vector<rational> c_;
    long T_;
};

// Expansion of a rational function at x = infinity, known through x^-T.
inline series1x series_from_rational(const rational_function& f, long T) {
    if (f.is_zero()) return series1x::zero(T);
    long dn = f.num().degree();
    long dd = f.den().degree();
    // Feed the inverse enough orders that the product is known through T.
    long Tden = T + 2 * dd + dn + 1;
    series1x den = series1x::from_poly(f.den(), Tden);
    series1x num = series1x::from_poly(f.num(), T + dd);
    series1x r = num * den.inverse();
    return r;
}

// Decay data read off an asymptotic series: for g with expansion
// c*x^-nu + O(x^-(nu+1)), nu > 1, the underlying tail sum behaves like
// (c/(nu-1))*x^-(nu-1). The classical h-step variant divides by h.
struct decay_rate {
    long exponent;         // nu - 1
    rational coefficient;  // c / (h * (nu - 1))
};

inline decay_rate mortici_rate(const series1x& g, long h = 1) {
    auto v = g.valuation();
    if (!v) throw all_zero_through_truncation();
    if (*v <= 1) throw lambda_not_greater_than_one();
    return {*v - 1, g.coeff(*v) / (rational(h) * rational(*v - 1))};
}

}  // namespace gammacf
