#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace gammacf {

// Dense univariate polynomial over a field K. Coefficients are stored low
// degree first with trailing zeros stripped, so the zero polynomial has an
// empty coefficient vector and degree() == -1.
template <class K>
class polynomial {
  public:
    polynomial() = default;
    polynomial(K constant) {
        if (!(constant == K(0))) c_.push_back(std::move(constant));
    }
    explicit polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { strip(); }

    static polynomial monomial(long deg, K coeff = K(1)) {
        if (coeff == K(0)) return {};
        std::vector<K> c(static_cast<size_t>(deg) + 1, K(0));
        c.back() = std::move(coeff);
        return polynomial(std::move(c));
    }
    // The identity polynomial x.
    static polynomial x() { return monomial(1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const K& leading() const {
        if (c_.empty()) throw std::domain_error("polynomial: zero has no leading coefficient");
        return c_.back();
    }
    // Coefficient of x^i; zero beyond the degree.
    K coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return polynomial(std::move(c));
    }
    friend polynomial operator-(const polynomial& a, const polynomial& b) {
        return a + (-b);
    }
    polynomial operator-() const {
        polynomial r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return polynomial(std::move(c));
    }
    friend polynomial operator*(const K& s, const polynomial& p) {
        polynomial r(p);
        for (auto& v : r.c_) v = s * v;
        r.strip();
        return r;
    }
    polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
    polynomial& operator-=(const polynomial& o) { return *this = *this - o; }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend bool operator==(const polynomial& a, const polynomial& b) {
        return a.c_ == b.c_;
    }

    // Horner evaluation in a field F; lift converts a K coefficient into F.
    template <class F, class Lift>
    F eval(const F& x, Lift lift) const {
        if (c_.empty()) return x - x;  // zero of F in x's precision
        F acc = lift(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + lift(c_[i]);
        return acc;
    }
    K eval(const K& x) const {
        return eval(x, [](const K& c) { return c; });
    }

    // p(x + h), by repeated in-place synthetic division (Taylor shift).
    polynomial shift(const K& h) const {
        if (c_.empty()) return {};
        std::vector<K> a(c_);
        long n = static_cast<long>(a.size()) - 1;
        for (long j = 0; j < n; ++j)
            for (long i = n - 1; i >= j; --i)
                a[static_cast<size_t>(i)] += h * a[static_cast<size_t>(i) + 1];
        return polynomial(std::move(a));
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            K v = coeff(i);
            if (v == K(0)) continue;
            std::string mag = term_string(v, i, var);
            if (out.empty())
                out = mag;
            else if (!mag.empty() && mag[0] == '-')
                out += " - " + mag.substr(1);
            else
                out += " + " + mag;
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const polynomial& p) {
        return os << p.to_string();
    }

  private:
    static std::string term_string(const K& v, long i, const std::string& var) {
        std::string cs = coeff_repr(v);
        if (i == 0) return cs;
        std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
        if (cs == "1") return xs;
        if (cs == "-1") return "-" + xs;
        return cs + "*" + xs;
    }
    static std::string coeff_repr(const K& v) {
        if constexpr (requires(const K& k) { k.to_string(); })
            return v.to_string();
        else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }

    void strip() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

// Euclidean division over the coefficient field: a = q*d + r, deg r < deg d.
template <class K>
std::pair<polynomial<K>, polynomial<K>> divide(const polynomial<K>& a,
                                               const polynomial<K>& d) {
    if (d.is_zero()) throw std::domain_error("polynomial: division by zero");
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo;
    long dq = a.degree() - d.degree();
    if (dq < 0) return {polynomial<K>{}, a};
    quo.assign(static_cast<size_t>(dq) + 1, K(0));
    for (long i = a.degree(); i >= d.degree(); --i) {
        K lead = rem[static_cast<size_t>(i)];
        if (lead == K(0)) continue;
        K f = lead / d.leading();
        quo[static_cast<size_t>(i - d.degree())] = f;
        for (long j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(i - d.degree() + j)] -= f * d.coeff(j);
    }
    return {polynomial<K>(std::move(quo)), polynomial<K>(std::move(rem))};
}

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
template <class K>
polynomial<K> gcd(polynomial<K> a, polynomial<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divide(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (K(1) / a.leading()) * a;
}

// Lagrange interpolation through distinct nodes.
template <class K>
polynomial<K> interpolate(const std::vector<std::pair<K, K>>& points) {
    polynomial<K> acc;
    for (size_t i = 0; i < points.size(); ++i) {
        polynomial<K> basis(K(1));
        K denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * polynomial<K>(std::vector<K>{K(0) - points[j].first, K(1)});
            denom = denom * (points[i].first - points[j].first);
        }
        acc = acc + (points[i].second / denom) * basis;
    }
    return acc;
}

// Exact square root in K[x], or nullopt when p is not a perfect square.
// Requires an exact scalar root for the leading coefficient, so K = rational.
inline std::optional<polynomial<rational>> sqrt_exact(const polynomial<rational>& p) {
    using poly = polynomial<rational>;
    if (p.is_zero()) return poly{};
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead = sqrt_exact(p.leading());
    if (!lead) return std::nullopt;
    long half = p.degree() / 2;
    std::vector<rational> s(static_cast<size_t>(half) + 1, rational(0));
    s[static_cast<size_t>(half)] = *lead;
    // Match coefficients from the top: [x^(2*half - k)] of s^2 determines s[half-k].
    for (long k = 1; k <= half; ++k) {
        rational acc(0);
        for (long i = half - k + 1; i < half; ++i) {
            long j = 2 * half - k - i;
            if (j >= 0 && j <= half) acc += s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
        }
        s[static_cast<size_t>(half - k)] =
            (p.coeff(2 * half - k) - acc) / (rational(2) * *lead);
    }
    poly root{std::vector<rational>(s)};
    if (root * root == p) return root;
    return std::nullopt;
}

}  // namespace gammacf
