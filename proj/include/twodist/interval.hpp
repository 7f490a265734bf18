// Outward-rounded interval arithmetic over dyadic endpoints. Exact field
// elements decide equalities; intervals only ever certify strict
// inequalities, escalating precision from 128 to 4096 bits before giving up.
#pragma once

#include "twodist/dyadic.hpp"
#include "twodist/hexc.hpp"
#include "twodist/quad_field.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace twodist {

constexpr unsigned kIntervalDefaultBits = 128;
constexpr unsigned kIntervalMaxBits = 4096;

// Raised when precision escalation up to the cap cannot separate a value
// from a target. Callers must treat this as "unknown", never as a verdict.
struct CannotSeparateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Interval {
    Dyadic lo, hi;

    Interval() = default;
    Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::logic_error("interval with lo > hi");
    }
    static Interval exact(const Dyadic& d) { return Interval(d, d); }

    bool is_point() const { return lo == hi; }
    Dyadic width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo.to_double() + hi.to_double()); }

    // -1 / +1 when the whole interval is on one side of zero, else 0.
    int sign() const {
        if (hi.sgn() < 0) return -1;
        if (lo.sgn() > 0) return 1;
        return 0;
    }
    bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
    bool contains(const Rational& r) const {
        return lo.to_rational() <= r && r <= hi.to_rational();
    }

    friend Interval operator+(const Interval& x, const Interval& y) {
        return Interval(x.lo + y.lo, x.hi + y.hi);
    }
    friend Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }
    friend Interval operator-(const Interval& x, const Interval& y) { return x + (-y); }
    friend Interval operator*(const Interval& x, const Interval& y) {
        Dyadic p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
        Dyadic lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Dyadic hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return Interval(std::move(lo), std::move(hi));
    }
};

inline Interval approx(const Rational& r, unsigned bits) {
    if (bits < 8) throw std::invalid_argument("interval precision below 8 bits");
    return Interval(dyadic_from_rational(r, bits, false), dyadic_from_rational(r, bits, true));
}

// Containment of sqrt: pre lo >= 0.
inline Interval interval_sqrt(const Interval& x, unsigned bits = kIntervalDefaultBits) {
    if (x.lo.sgn() < 0) throw std::domain_error("interval_sqrt of interval with negative lower bound");
    return Interval(dyadic_sqrt(x.lo, bits, false), dyadic_sqrt(x.hi, bits, true));
}

namespace detail {
inline Interval sqrt_of_int(int n, unsigned bits) {
    return interval_sqrt(Interval::exact(Dyadic(n)), bits);
}
}  // namespace detail

template <int N>
Interval approx(const QuadExt<N>& x, unsigned bits) {
    if (bits < 8) throw std::invalid_argument("interval precision below 8 bits");
    unsigned inner = bits + 8;
    return approx(x.a, inner) + approx(x.b, inner) * detail::sqrt_of_int(N, inner);
}

// Componentwise enclosure of z = Re + i*Im: Re = a + d*sqrt33,
// Im = b*sqrt3 + c*sqrt11.
struct ComplexInterval {
    Interval re, im;
};

inline ComplexInterval approx(const HexC& z, unsigned bits) {
    if (bits < 8) throw std::invalid_argument("interval precision below 8 bits");
    unsigned inner = bits + 8;
    Interval re = approx(Q33(z.a, z.d), inner);
    Interval im = approx(z.b, inner) * detail::sqrt_of_int(3, inner) +
                  approx(z.c, inner) * detail::sqrt_of_int(11, inner);
    return {re, im};
}

// Evaluates `f` at escalating precision until the enclosure excludes zero;
// returns the certified sign. Exact-zero inputs cannot be separated: callers
// decide equalities in the field first.
inline int certify_sign(const std::function<Interval(unsigned)>& f,
                        unsigned start_bits = kIntervalDefaultBits) {
    for (unsigned bits = start_bits; bits <= kIntervalMaxBits; bits *= 2) {
        int s = f(bits).sign();
        if (s != 0) return s;
    }
    throw CannotSeparateError("interval separation failed at " +
                              std::to_string(kIntervalMaxBits) + " bits");
}

}  // namespace twodist
