// The real quadratic fields Q(sqrt N) for N = 5 and N = 33, as pairs of
// rationals a + b*sqrt(N). Equality is componentwise (sqrt N irrational, so
// the representation is unique); ordering is the real embedding, decided by
// rational case analysis only -- no floating point anywhere.
#pragma once

#include "twodist/rational.hpp"

#include <ostream>
#include <string>

namespace twodist {

template <int N>
struct QuadExt {
    static_assert(N == 5 || N == 33, "only the two fields the constructions need");

    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(N)

    QuadExt() = default;
    QuadExt(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    explicit QuadExt(Rational ra) : a(std::move(ra)), b(0) {}
    explicit QuadExt(long v) : a(v), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a, -x.b}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.a * y.a + Rational(N) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend QuadExt operator*(const Rational& s, const QuadExt& x) {
        return {s * x.a, s * x.b};
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt conj() const { return {a, -b}; }

    // Field norm a^2 - N b^2; zero iff the element is zero.
    Rational field_norm() const { return a * a - Rational(N) * b * b; }

    QuadExt inverse() const {
        Rational nrm = field_norm();
        if (nrm == 0) throw std::domain_error("inverse of zero field element");
        return {a / nrm, -b / nrm};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        return x * y.inverse();
    }

    std::string str() const {
        return "(" + rat_to_string(a) + " + " + rat_to_string(b) + "*sqrt" +
               std::to_string(N) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
        return os << x.str();
    }
};

// Exact sign of a + b*sqrt(N). Mixed-sign cases compare a^2 against N b^2;
// equality there means |a| = |b| sqrt(N), possible only at a = b = 0.
template <int N>
int quad_sign(const QuadExt<N>& x) {
    int sa = sign(x.a), sb = sign(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: the larger square decides.
    Rational t = x.a * x.a - Rational(N) * x.b * x.b;
    int st = sign(t);
    if (st == 0) return 0;  // unreachable for nonzero x; kept for totality
    return st == 1 ? sa : sb;
}

using Q5 = QuadExt<5>;
using Q33 = QuadExt<33>;

inline int q5_sign(const Q5& x) { return quad_sign(x); }
inline int q33_sign(const Q33& x) { return quad_sign(x); }

template <int N>
bool operator<(const QuadExt<N>& x, const QuadExt<N>& y) {
    return quad_sign<N>(x - y) < 0;
}
template <int N>
bool operator<=(const QuadExt<N>& x, const QuadExt<N>& y) {
    return quad_sign<N>(x - y) <= 0;
}
template <int N>
bool operator>(const QuadExt<N>& x, const QuadExt<N>& y) {
    return quad_sign<N>(x - y) > 0;
}
template <int N>
bool operator>=(const QuadExt<N>& x, const QuadExt<N>& y) {
    return quad_sign<N>(x - y) >= 0;
}

// Pentagon-family constants. R is the circumradius of the unit-side regular
// pentagon, d its diagonal (the golden ratio).
namespace pent_const {
inline Q5 r_sq() { return {Rational(1, 2), Rational(1, 10)}; }          // (5+sqrt5)/10
inline Q5 d_sq() { return {Rational(3, 2), Rational(1, 2)}; }           // (3+sqrt5)/2
inline Q5 cos72() { return {Rational(-1, 4), Rational(1, 4)}; }         // (sqrt5-1)/4
inline Q5 cos144() { return {Rational(-1, 4), Rational(-1, 4)}; }       // -(sqrt5+1)/4
inline Q5 cos_spindle_unit() { return {Rational(19, 20), Rational(1, 100)}; }   // (95+sqrt5)/100
inline Q5 cos_spindle_diag() { return {Rational(19, 20), Rational(-1, 100)}; }  // (95-sqrt5)/100
}  // namespace pent_const

}  // namespace twodist
