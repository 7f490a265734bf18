// Deduplicated, canonically ordered point sets and the operations that build
// them: Minkowski sums, exact rotations (hexagon family), disk filtering.
// The two families never mix; cross-family calls do not typecheck.
#pragma once

#include "twodist/hex_point.hpp"
#include "twodist/pent_point.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace twodist {

template <class P>
struct PointSet {
    std::vector<P> pts;  // sorted by canonical key, no duplicates

    PointSet() = default;
    explicit PointSet(std::vector<P> raw) : pts(std::move(raw)) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }

    std::size_t size() const { return pts.size(); }
    const P& operator[](std::size_t i) const { return pts[i]; }
    auto begin() const { return pts.begin(); }
    auto end() const { return pts.end(); }

    bool contains(const P& p) const {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        return it != pts.end() && *it == p;
    }
    // Index of a point; -1 when absent.
    long index_of(const P& p) const {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        if (it != pts.end() && *it == p) return it - pts.begin();
        return -1;
    }
};

using PentSet = PointSet<PentPoint>;
using HexSet = PointSet<HexPoint>;

template <class P>
PointSet<P> minkowski_sum(const PointSet<P>& a, const PointSet<P>& b) {
    std::vector<P> sums;
    sums.reserve(a.size() * b.size());
    for (const P& x : a)
        for (const P& y : b) sums.push_back(add(x, y));
    return PointSet<P>(std::move(sums));
}

inline HexSet rotate_hex(const HexSet& a, const HexC& rotor) {
    if (hexc_norm_sq(rotor) != Q33(Rational(1), Rational(0)))
        throw std::domain_error("rotate_hex requires an exactly unit rotor");
    std::vector<HexPoint> out;
    out.reserve(a.size());
    for (const HexPoint& p : a) out.push_back(HexPoint(hexc_mul(p.z, rotor)));
    return HexSet(std::move(out));
}

// Keeps points with |z|^2 <= r_sq (closed disk).
template <class P>
PointSet<P> disk_filter(const PointSet<P>& a, const Rational& r_sq) {
    using F = typename P::Field;
    std::vector<P> kept;
    for (const P& p : a)
        if (quad_sign(p.norm_sq() - F(r_sq)) <= 0) kept.push_back(p);
    return PointSet<P>(std::move(kept));
}

template <class P>
typename P::Field dist_sq(const P& p, const P& q);

template <>
inline Q5 dist_sq<PentPoint>(const PentPoint& p, const PentPoint& q) {
    return pent_dist_sq(p, q);
}
template <>
inline Q33 dist_sq<HexPoint>(const HexPoint& p, const HexPoint& q) {
    return hex_dist_sq(p, q);
}

// Squared distance of a point p to which a point and its image under
// rotation by angle(cos_angle) around the origin are separated:
// 2 * radius_sq * (1 - cos_angle).
template <class F>
F chord_sq_around_pivot(const F& radius_sq, const F& cos_angle) {
    return (F(Rational(2)) * radius_sq) * (F(Rational(1)) - cos_angle);
}

}  // namespace twodist
