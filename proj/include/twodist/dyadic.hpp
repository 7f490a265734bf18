// Dyadic rationals m * 2^e with arbitrary-precision mantissa. Sums and
// products are exact; directed rounding enters only through from_rational
// and sqrt, which is where interval endpoints get their finite precision.
#pragma once

#include "twodist/rational.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace twodist {

struct Dyadic {
    BigInt m;
    std::int64_t e = 0;

    Dyadic() = default;
    Dyadic(BigInt mantissa, std::int64_t exponent) : m(std::move(mantissa)), e(exponent) {
        normalize();
    }
    explicit Dyadic(long v) : m(v), e(0) {}

    void normalize() {
        if (m == 0) {
            e = 0;
            return;
        }
        std::size_t z = lsb(abs(m));
        if (z > 0) {
            m >>= z;
            e += static_cast<std::int64_t>(z);
        }
    }

    bool is_zero() const { return m == 0; }
    int sgn() const { return m.sign(); }

    Rational to_rational() const {
        if (e >= 0) return Rational(m << e);
        return Rational(m, BigInt(1) << (-e));
    }

    double to_double() const {
        if (m == 0) return 0.0;
        BigInt am = abs(m);
        auto k = static_cast<std::int64_t>(msb(am));
        std::int64_t shift = 0;
        if (k > 52) {
            shift = k - 52;
            am >>= shift;
        }
        double d = am.convert_to<double>();
        if (m < 0) d = -d;
        return std::ldexp(d, static_cast<int>(e + shift));
    }

    friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
        if (x.m == 0) return y;
        if (y.m == 0) return x;
        if (x.e == y.e) return Dyadic(x.m + y.m, x.e);
        if (x.e > y.e) return Dyadic((x.m << (x.e - y.e)) + y.m, y.e);
        return Dyadic(x.m + (y.m << (y.e - x.e)), x.e);
    }
    friend Dyadic operator-(const Dyadic& x) { return Dyadic(-x.m, x.e); }
    friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
    friend Dyadic operator*(const Dyadic& x, const Dyadic& y) {
        return Dyadic(x.m * y.m, x.e + y.e);
    }

    friend bool operator==(const Dyadic& x, const Dyadic& y) {
        return x.m == y.m && x.e == y.e;  // normalized form is unique
    }
    friend bool operator!=(const Dyadic& x, const Dyadic& y) { return !(x == y); }
    friend bool operator<(const Dyadic& x, const Dyadic& y) { return (x - y).sgn() < 0; }
    friend bool operator<=(const Dyadic& x, const Dyadic& y) { return (x - y).sgn() <= 0; }
    friend bool operator>(const Dyadic& x, const Dyadic& y) { return (x - y).sgn() > 0; }
    friend bool operator>=(const Dyadic& x, const Dyadic& y) { return (x - y).sgn() >= 0; }

    std::string str() const { return m.str() + "*2^" + std::to_string(e); }
};

// floor(p/q) for q > 0; cpp_int division truncates toward zero.
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
    if (p >= 0) return p / q;
    return -((-p + q - 1) / q);
}

// Dyadic d with d <= p/q (down) or d >= p/q (up), relative error < 2^(1-bits).
inline Dyadic dyadic_from_rational(const Rational& r, unsigned bits, bool round_up) {
    const BigInt& p = numerator(r);
    const BigInt& q = denominator(r);
    if (p == 0) return Dyadic();
    if (q == 1) return Dyadic(p, 0);
    std::int64_t scale = static_cast<std::int64_t>(bits) + static_cast<std::int64_t>(msb(q)) -
                         static_cast<std::int64_t>(msb(abs(p))) + 2;
    if (scale < 1) scale = 1;
    BigInt shifted = p << scale;
    BigInt down = floor_div(shifted, q);
    bool exact = (down * q == shifted);
    if (round_up && !exact) down += 1;
    return Dyadic(down, -scale);
}

// Integer square root with remainder; x >= 0.
inline BigInt isqrt_rem(const BigInt& x, BigInt& rem) {
    BigInt r;
    BigInt s = sqrt(x, r);
    rem = r;
    return s;
}

// sqrt with directed rounding at ~bits of relative precision; x >= 0.
inline Dyadic dyadic_sqrt(const Dyadic& x, unsigned bits, bool round_up) {
    if (x.m < 0) throw std::domain_error("sqrt of negative dyadic");
    if (x.m == 0) return Dyadic();
    BigInt m = x.m;
    std::int64_t e = x.e;
    std::int64_t have = static_cast<std::int64_t>(msb(m)) + 1;
    std::int64_t j = 2 * (static_cast<std::int64_t>(bits) + 2) - have;
    if (j < 0) j = 0;
    if (((e - j) & 1) != 0) j += 1;
    m <<= j;
    e -= j;
    BigInt rem;
    BigInt root = isqrt_rem(m, rem);
    if (round_up && rem != 0) root += 1;
    return Dyadic(root, e / 2);
}

}  // namespace twodist
