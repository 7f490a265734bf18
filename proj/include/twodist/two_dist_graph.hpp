// Embedded two-distance graphs: a point set plus exact edge classification
// against the two squared targets, and the audit that re-certifies every
// pair (exact equality for edges, interval separation for non-edges).
#pragma once

#include "twodist/edge_graph.hpp"
#include "twodist/interval.hpp"
#include "twodist/point_set.hpp"

#include <string>
#include <vector>

namespace twodist {

template <class P>
struct GeomGraph {
    using Field = typename P::Field;

    PointSet<P> points;
    Field t1, t2;  // squared forbidden distances
    EdgeGraph edges;
    std::string provenance;

    int n() const { return static_cast<int>(points.size()); }
};

using PentGraph = GeomGraph<PentPoint>;
using HexGraph = GeomGraph<HexPoint>;

// Classifies every vertex pair by exact squared distance.
template <class P>
GeomGraph<P> build_edges(const PointSet<P>& pts, const typename P::Field& t1,
                         const typename P::Field& t2, std::string provenance = "") {
    if (t1 == t2) throw std::invalid_argument("build_edges: identical targets");
    if (quad_sign(t1) <= 0 || quad_sign(t2) <= 0)
        throw std::invalid_argument("build_edges: targets must be positive");
    GeomGraph<P> g;
    g.points = pts;
    g.t1 = t1;
    g.t2 = t2;
    g.provenance = std::move(provenance);
    EdgeList e1, e2;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto d = dist_sq(pts[i], pts[j]);
            if (d == t1)
                e1.emplace_back(i, j);
            else if (d == t2)
                e2.emplace_back(i, j);
        }
    g.edges = EdgeGraph(n, std::move(e1), std::move(e2));
    return g;
}

struct AuditReport {
    std::size_t pairs = 0;
    std::size_t edges_e1 = 0;
    std::size_t edges_e2 = 0;
    unsigned max_bits_used = 0;
    bool ok = false;
};

// Re-derives the classification of every pair independently of the stored
// lists: listed edges must match their target exactly, and every non-edge is
// separated from both targets by intervals (escalating precision).
template <class P>
AuditReport audit_edges(const GeomGraph<P>& g) {
    AuditReport rep;
    int n = g.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ++rep.pairs;
            auto d = dist_sq(g.points[i], g.points[j]);
            EdgeType t = g.edges.type(i, j);
            if (d == g.t1) {
                if (t != EdgeType::E1) return rep;
                ++rep.edges_e1;
                continue;
            }
            if (d == g.t2) {
                if (t != EdgeType::E2) return rep;
                ++rep.edges_e2;
                continue;
            }
            if (t != EdgeType::None) return rep;
            for (const auto& target : {g.t1, g.t2}) {
                auto diff = d - target;
                unsigned bits = kIntervalDefaultBits;
                int s = 0;
                for (; bits <= kIntervalMaxBits; bits *= 2) {
                    s = approx(diff, bits).sign();
                    if (s != 0) break;
                }
                if (s == 0)
                    throw CannotSeparateError("audit: non-edge pair not separated from target");
                if (s != quad_sign(diff))
                    throw std::logic_error("audit: interval sign disagrees with exact sign");
                rep.max_bits_used = std::max(rep.max_bits_used, bits);
            }
        }
    }
    rep.ok = rep.edges_e1 == g.edges.e1.size() && rep.edges_e2 == g.edges.e2.size();
    return rep;
}

}  // namespace twodist
