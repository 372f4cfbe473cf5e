#pragma once

#include <boost/rational.hpp>
#include <string>

namespace vtspec {

using Rational = boost::rational<long long>;

inline std::string to_fraction_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace vtspec
