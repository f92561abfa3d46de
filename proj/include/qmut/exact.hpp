#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qmut {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::runtime_error("expected an integer value");
    return numerator(r);
}

}  // namespace qmut
