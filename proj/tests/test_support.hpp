#pragma once

#include <string>

#include "../include/gammacf/bigfloat.hpp"
#include "reference_values.hpp"

namespace gammacf::testsup {

inline bigfloat ref(const char* digits55, long digits = 55) {
    return bigfloat(std::string(digits55), digits);
}

// |a - b| < 10^exp10
inline bool close(const bigfloat& a, const bigfloat& b, long exp10) {
    bigfloat bound("1e" + std::to_string(exp10), std::max(a.digits(), b.digits()));
    return (a - b).abs() < bound;
}

}  // namespace gammacf::testsup
