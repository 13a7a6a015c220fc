#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace toriq {

// All core arithmetic is exact. Int is an arbitrary-precision integer,
// Rat an arbitrary-precision rational kept in canonical form (lowest
// terms, positive denominator). No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rat>;

IntVector int_vector(std::initializer_list<long long> entries);

Int dot(const IntVector& a, const IntVector& b);

// Floor division; b must be positive.
Int floor_div(const Int& a, const Int& b);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

struct ExtGcd {
    Int g;  // nonnegative
    Int s;
    Int t;  // s*a + t*b == g
};
ExtGcd ext_gcd(const Int& a, const Int& b);

bool is_integral(const RationalVector& v);
IntVector to_int_vector(const RationalVector& v);
RationalVector to_rational_vector(const IntVector& v);

std::string to_string(const IntVector& v);       // "(0, 1, -1)"
std::string to_string(const RationalVector& v);  // "(1/2, 0)"

}  // namespace toriq
