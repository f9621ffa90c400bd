#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace linsys {

// All arithmetic in this library is exact: arbitrary-precision integers and
// reduced rationals. Invariant factors grow quickly (n^{n-2} for complete
// graphs), so there is no fixed-width fast path in the public types.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Floor division and remainder; b must be nonzero. The remainder has the
// sign of b (nonnegative for b > 0), unlike C++ '%'.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int floor_rat(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

inline long long to_i64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for 64-bit conversion: " + v.str());
    return static_cast<long long>(v);
}

inline long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int vec_sum(const IntVec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace linsys
