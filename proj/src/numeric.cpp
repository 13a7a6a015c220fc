#include "toriq/numeric.hpp"

#include "toriq/errors.hpp"

#include <sstream>

namespace toriq {

IntVector int_vector(std::initializer_list<long long> entries) {
    IntVector v;
    v.reserve(entries.size());
    for (long long e : entries) v.emplace_back(e);
    return v;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("dot: vectors of dimension " + std::to_string(a.size()) +
                                     " and " + std::to_string(b.size()));
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Int floor_div(const Int& a, const Int& b) {
    // cpp_int division truncates toward zero
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int rat_floor(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

Int rat_ceil(const Rat& q) {
    return -rat_floor(-q);
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    // iterative extended Euclid; invariant r0 = s0*a + t0*b, r1 = s1*a + t1*b
    Int r0 = a, r1 = b;
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

bool is_integral(const RationalVector& v) {
    for (const Rat& q : v)
        if (denominator(q) != 1) return false;
    return true;
}

IntVector to_int_vector(const RationalVector& v) {
    IntVector out;
    out.reserve(v.size());
    for (const Rat& q : v) {
        if (denominator(q) != 1)
            throw Error("to_int_vector: entry " + q.str() + " is not an integer");
        out.push_back(numerator(q));
    }
    return out;
}

RationalVector to_rational_vector(const IntVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

namespace {

template <typename Vec>
std::string join_vector(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string to_string(const IntVector& v) { return join_vector(v); }
std::string to_string(const RationalVector& v) { return join_vector(v); }

}  // namespace toriq
