// Pentagon-family lattice points: non-negative multiplicities over the five
// generators u_k = R*(sin 2pi k/5, cos 2pi k/5). Since sum_k u_k = 0, two
// multiplicity vectors denote the same plane point iff they differ by a
// multiple of (1,1,1,1,1); the canonical form subtracts min(n_k) and keeps
// the original level as provenance.
#pragma once

#include "twodist/interval.hpp"
#include "twodist/quad_field.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

namespace twodist {

using PentVec = std::array<std::int64_t, 5>;

inline PentVec pent_sub(const PentVec& x, const PentVec& y) {
    PentVec r;
    for (int i = 0; i < 5; ++i) r[i] = x[i] - y[i];
    return r;
}
inline PentVec pent_add(const PentVec& x, const PentVec& y) {
    PentVec r;
    for (int i = 0; i < 5; ++i) r[i] = x[i] + y[i];
    return r;
}

// |sum_k c_k u_k|^2 = R^2 (S0 + 2 S1 cos72 + 2 S2 cos144) with
// S_t = sum_j c_j c_{j+t}. Invariant under shifts by (1,1,1,1,1).
inline Q5 pent_form(const PentVec& c) {
    std::int64_t s0 = 0, s1 = 0, s2 = 0;
    for (int j = 0; j < 5; ++j) {
        s0 += c[j] * c[j];
        s1 += c[j] * c[(j + 1) % 5];
        s2 += c[j] * c[(j + 2) % 5];
    }
    Q5 sum = Q5(Rational(s0)) + Rational(2 * s1) * pent_const::cos72() +
             Rational(2 * s2) * pent_const::cos144();
    return pent_const::r_sq() * sum;
}

// Cross product sum_jk p_j q_k (u_j x u_k) = A*(R^2 sin72) + B*(R^2 sin144).
// Both basis values are positive; A and B are integers.
struct PentCross {
    std::int64_t a = 0, b = 0;

    bool is_zero() const { return a == 0 && b == 0; }

    // (R^2 sin72)^2 = R^4 (5+sqrt5)/8, (R^2 sin144)^2 = R^4 (5-sqrt5)/8,
    // product of the two basis values = R^4 sqrt5/4.
    Q5 value_sq() const {
        Q5 r4 = pent_const::r_sq() * pent_const::r_sq();
        Q5 t1_sq = r4 * Q5(Rational(5, 8), Rational(1, 8));
        Q5 t2_sq = r4 * Q5(Rational(5, 8), Rational(-1, 8));
        Q5 t1t2 = r4 * Q5(Rational(0), Rational(1, 4));
        return Rational(a) * Rational(a) * t1_sq + Rational(b) * Rational(b) * t2_sq +
               Rational(2 * a) * Rational(b) * t1t2;
    }

    // Exact sign: mixed-sign case compares the squared terms; they can tie
    // only at a = b = 0 because their ratio d^2 is irrational.
    int sgn() const {
        auto si = [](std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
        int sa = si(a), sb = si(b);
        if (sa == 0) return sb;
        if (sb == 0) return sa;
        if (sa == sb) return sa;
        Q5 t = Rational(a) * Rational(a) * Q5(Rational(5), Rational(1)) -
               Rational(b) * Rational(b) * Q5(Rational(5), Rational(-1));
        int st = q5_sign(t);
        return st == 1 ? sa : sb;
    }
};

inline PentCross pent_cross(const PentVec& p, const PentVec& q) {
    PentCross c;
    for (int j = 0; j < 5; ++j) {
        c.a += p[j] * q[(j + 1) % 5] - p[(j + 1) % 5] * q[j];
        c.b += p[j] * q[(j + 2) % 5] - p[(j + 2) % 5] * q[j];
    }
    return c;
}

struct PentPoint {
    PentVec gen{};  // canonical: min entry is 0
    int level = 0;  // original sum of multiplicities

    PentPoint() = default;
    explicit PentPoint(const PentVec& raw) {
        std::int64_t mn = raw[0];
        for (int i = 1; i < 5; ++i) mn = std::min(mn, raw[i]);
        level = 0;
        for (int i = 0; i < 5; ++i) {
            gen[i] = raw[i] - mn;
            level += static_cast<int>(raw[i]);
        }
    }

    static constexpr const char* family() { return "pentagon"; }
    using Field = Q5;

    // Same plane point iff same canonical vector.
    friend bool operator==(const PentPoint& x, const PentPoint& y) { return x.gen == y.gen; }
    friend bool operator!=(const PentPoint& x, const PentPoint& y) { return !(x == y); }
    friend bool operator<(const PentPoint& x, const PentPoint& y) {
        if (x.gen != y.gen) return x.gen < y.gen;
        return x.level < y.level;
    }

    friend PentPoint add(const PentPoint& x, const PentPoint& y) {
        PentPoint r(pent_add(x.gen, y.gen));
        r.level = x.level + y.level;
        return r;
    }

    Q5 norm_sq() const { return pent_form(gen); }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 5; ++i) s += std::to_string(gen[i]) + (i < 4 ? "," : "");
        return s + ")@" + std::to_string(level);
    }
};

inline Q5 pent_dist_sq(const PentPoint& p, const PentPoint& q) {
    return pent_form(pent_sub(p.gen, q.gen));
}

// Enclosures of the plane coordinates, derived on demand; the exact lattice
// representation stays the source of truth.
inline std::pair<Interval, Interval> pent_coords(const PentPoint& p, unsigned bits) {
    Q5 r_sq = pent_const::r_sq();
    // R^2 sin^2(2pi k/5) and R^2 cos^2(2pi k/5) with the sign of each root.
    struct Gen {
        int sx;
        Q5 x_sq;
        int sy;
        Q5 y_sq;
    };
    const Q5 sin72_sq = r_sq * Q5(Rational(5, 8), Rational(1, 8));
    const Q5 sin144_sq = r_sq * Q5(Rational(5, 8), Rational(-1, 8));
    const Q5 cos72_sq = r_sq * (pent_const::cos72() * pent_const::cos72());
    const Q5 cos144_sq = r_sq * (pent_const::cos144() * pent_const::cos144());
    const Gen gens[5] = {
        {0, Q5(Rational(0)), +1, r_sq},
        {+1, sin72_sq, +1, cos72_sq},
        {+1, sin144_sq, -1, cos144_sq},
        {-1, sin144_sq, -1, cos144_sq},
        {-1, sin72_sq, +1, cos72_sq},
    };
    Interval x = Interval::exact(Dyadic(0)), y = x;
    for (int k = 0; k < 5; ++k) {
        if (p.gen[k] == 0) continue;
        Interval mult = Interval::exact(Dyadic(p.gen[k]));
        Interval xs = interval_sqrt(approx(gens[k].x_sq, bits), bits);
        Interval ys = interval_sqrt(approx(gens[k].y_sq, bits), bits);
        if (gens[k].sx < 0) xs = -xs;
        if (gens[k].sy < 0) ys = -ys;
        x = x + mult * xs;
        y = y + mult * ys;
    }
    return {x, y};
}

}  // namespace twodist
