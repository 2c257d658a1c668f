#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfpi::exact {

// Plain value semantics (no expression templates): entries live in vectors
// and get passed through generic code.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

// g = gcd(a,b) with u*a + v*b = g.
inline BigInt egcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
    BigInt r0 = a, r1 = b;
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        BigInt t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    u = s0;
    v = t0;
    return r0;
}

// Residue in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

}  // namespace hopfpi::exact
