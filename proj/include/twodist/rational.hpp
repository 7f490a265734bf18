// Arbitrary-precision rationals. Backed by boost::multiprecision's
// cpp_rational, which keeps exactly the invariants we need: denominator > 0,
// gcd(|num|, den) = 1, zero canonicalized as 0/1.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace twodist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

// Canonical wire form is always "p/q", q > 0, lowest terms.
inline std::string rat_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" and "p/q" (q may be negative; normalized on construction).
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("malformed rational: " + s);
    }
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace twodist
