// The complex ring Q[i*sqrt3, i*sqrt11]: numbers a + b*i*sqrt3 + c*i*sqrt11
// + d*sqrt33 with rational components. Closed under +, *, conjugation.
// Basis products: (i√3)(i√11) = -√33, (i√3)(√33) = 3i√11, (i√11)(√33) = 11i√3,
// (√33)^2 = 33. Squared moduli land in the real subring Q(√33).
#pragma once

#include "twodist/quad_field.hpp"
#include "twodist/rational.hpp"

#include <ostream>
#include <string>

namespace twodist {

struct HexC {
    Rational a;  // 1
    Rational b;  // i*sqrt3
    Rational c;  // i*sqrt11
    Rational d;  // sqrt33

    HexC() : a(0), b(0), c(0), d(0) {}
    HexC(Rational ra, Rational rb, Rational rc, Rational rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}
    explicit HexC(long v) : a(v), b(0), c(0), d(0) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend HexC operator+(const HexC& x, const HexC& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend HexC operator-(const HexC& x, const HexC& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend HexC operator-(const HexC& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend bool operator==(const HexC& x, const HexC& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const HexC& x, const HexC& y) { return !(x == y); }

    std::string str() const {
        return "[" + rat_to_string(a) + ", " + rat_to_string(b) + ", " +
               rat_to_string(c) + ", " + rat_to_string(d) + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const HexC& z) {
        return os << z.str();
    }
};

inline HexC hexc_mul(const HexC& x, const HexC& y) {
    return {
        x.a * y.a - 3 * x.b * y.b - 11 * x.c * y.c + 33 * x.d * y.d,
        x.a * y.b + x.b * y.a + 11 * (x.c * y.d + x.d * y.c),
        x.a * y.c + x.c * y.a + 3 * (x.b * y.d + x.d * y.b),
        x.a * y.d + x.d * y.a - (x.b * y.c + x.c * y.b),
    };
}

inline HexC hexc_conj(const HexC& x) { return {x.a, -x.b, -x.c, x.d}; }

// |z|^2 = z * conj(z). The i-components cancel identically; computed via the
// ring product and checked rather than assumed.
inline Q33 hexc_norm_sq(const HexC& z) {
    HexC p = hexc_mul(z, hexc_conj(z));
    if (p.b != 0 || p.c != 0)
        throw std::logic_error("norm_sq produced nonzero imaginary components");
    return {p.a, p.d};
}

// Real and imaginary parts as elements of Q(sqrt33) and a (b,c) pair:
// z = (a + d*sqrt33) + i*(b*sqrt3 + c*sqrt11).
inline Q33 hexc_real(const HexC& z) { return {z.a, z.d}; }

namespace hex_const {
inline HexC omega() { return {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}; }  // primitive 6th root
inline HexC rho() { return {Rational(5, 6), Rational(0), Rational(1, 6), Rational(0)}; }    // exp(i*arccos(5/6))
inline HexC rho_inv() { return hexc_conj(rho()); }
}  // namespace hex_const

}  // namespace twodist
