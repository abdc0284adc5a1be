#pragma once

#include <stdexcept>
#include <string>

namespace gammacf {

// Contract errors shared across the library. Each carries a human-readable
// message; index-bearing ones also expose the offending index.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unbound_parameter : std::runtime_error {
    explicit unbound_parameter(const std::string& name)
        : std::runtime_error("unbound parameter '" + name + "'"), parameter(name) {}
    std::string parameter;
};

struct indexed_error : std::runtime_error {
    indexed_error(const std::string& msg, long index_)
        : std::runtime_error(msg + " at index " + std::to_string(index_)), index(index_) {}
    long index;
};

struct template_denominator_zero : indexed_error {
    explicit template_denominator_zero(long m)
        : indexed_error("coefficient template denominator vanishes", m) {}
};
struct zero_denominator_b : indexed_error {
    explicit zero_denominator_b(long n)
        : indexed_error("approximant denominator B_n vanishes", n) {}
};
struct zero_factor : indexed_error {
    explicit zero_factor(long m) : indexed_error("transform factor vanishes", m) {}
};
struct contraction_undefined : indexed_error {
    explicit contraction_undefined(long m)
        : indexed_error("even-part contraction undefined", m) {}
};
struct adjoint_zero : indexed_error {
    explicit adjoint_zero(long m) : indexed_error("adjoint factor vanishes", m) {}
};

struct no_solution_found : std::runtime_error {
    no_solution_found() : std::runtime_error("no modifying-factor solution found") {}
};
struct search_exhausted : std::runtime_error {
    explicit search_exhausted(const std::string& why)
        : std::runtime_error("search exhausted: " + why) {}
};
struct no_exact_fit : std::runtime_error {
    explicit no_exact_fit(const std::string& why)
        : std::runtime_error("no exact fit: " + why) {}
};

struct pole_at_minus_one : std::runtime_error {
    pole_at_minus_one() : std::runtime_error("value -1 is a pole of the wrapper") {}
};
struct nonpositive_argument : std::runtime_error {
    explicit nonpositive_argument(const std::string& what_arg)
        : std::runtime_error("nonpositive argument: " + what_arg) {}
};
struct pole_argument : std::runtime_error {
    explicit pole_argument(const std::string& what_arg)
        : std::runtime_error("argument at a pole: " + what_arg) {}
};
struct lambda_not_greater_than_one : std::runtime_error {
    lambda_not_greater_than_one()
        : std::runtime_error("decay exponent must exceed one") {}
};
struct not_log_normalized : std::runtime_error {
    not_log_normalized() : std::runtime_error("series is not log-normalized") {}
};
struct division_by_zero_series : std::runtime_error {
    division_by_zero_series() : std::runtime_error("division by the zero series") {}
};
struct all_zero_through_truncation : std::runtime_error {
    all_zero_through_truncation()
        : std::runtime_error("series is zero through its truncation order") {}
};
struct domain_violation : std::runtime_error {
    explicit domain_violation(const std::string& why)
        : std::runtime_error("domain violation: " + why) {}
};

}  // namespace gammacf
