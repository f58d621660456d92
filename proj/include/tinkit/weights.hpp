#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tinkit {

/// Exact nonnegative rational vertex weight.
using Weight = boost::multiprecision::cpp_rational;
using WeightVector = std::vector<Weight>;

inline Weight make_weight(long long num, long long den = 1) { return Weight(num, den); }

inline std::string weight_numerator(const Weight& w) {
    return boost::multiprecision::numerator(w).str();
}
inline std::string weight_denominator(const Weight& w) {
    return boost::multiprecision::denominator(w).str();
}

}  // namespace tinkit
