// Hexagon-family points: exact complex coordinates in Q[i sqrt3, i sqrt11].
#pragma once

#include "twodist/hexc.hpp"
#include "twodist/interval.hpp"
#include "twodist/quad_field.hpp"

#include <string>
#include <tuple>

namespace twodist {

struct HexPoint {
    HexC z;

    HexPoint() = default;
    explicit HexPoint(HexC v) : z(std::move(v)) {}

    static constexpr const char* family() { return "hexagon"; }
    using Field = Q33;

    friend bool operator==(const HexPoint& x, const HexPoint& y) { return x.z == y.z; }
    friend bool operator!=(const HexPoint& x, const HexPoint& y) { return !(x == y); }
    friend bool operator<(const HexPoint& x, const HexPoint& y) {
        return std::tie(x.z.a, x.z.b, x.z.c, x.z.d) < std::tie(y.z.a, y.z.b, y.z.c, y.z.d);
    }

    friend HexPoint add(const HexPoint& x, const HexPoint& y) { return HexPoint(x.z + y.z); }

    Q33 norm_sq() const { return hexc_norm_sq(z); }

    std::string str() const { return z.str(); }
};

inline Q33 hex_dist_sq(const HexPoint& p, const HexPoint& q) {
    return hexc_norm_sq(p.z - q.z);
}

inline std::pair<Interval, Interval> hex_coords(const HexPoint& p, unsigned bits) {
    ComplexInterval ci = approx(p.z, bits);
    return {ci.re, ci.im};
}

}  // namespace twodist
