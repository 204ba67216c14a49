#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace boolpred {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace boolpred
