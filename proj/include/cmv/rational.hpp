#pragma once

#include <boost/rational.hpp>
#include <string>

namespace cmv {

// Exact rational bookkeeping (stacky masses, deformation lengths). All values
// that occur are tiny; long long is plenty.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r)
{
    return boost::rational_cast<double>(r);
}

inline std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace cmv
