// Combinatorial core of a two-distance graph: dense 0-based vertices and two
// typed edge sets. Everything downstream of geometry (solver, automorphisms,
// subgraph search, proof replay) works on this view.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twodist {

using EdgeList = std::vector<std::pair<int, int>>;

enum class EdgeType : std::uint8_t { None = 0, E1 = 1, E2 = 2 };

struct EdgeGraph {
    int n = 0;
    EdgeList e1, e2;  // each pair (i,j) with i < j, lists sorted

    EdgeGraph() = default;
    EdgeGraph(int nv, EdgeList a, EdgeList b) : n(nv), e1(std::move(a)), e2(std::move(b)) {
        normalize(e1);
        normalize(e2);
        rebuild_types();
    }

    std::size_t edge_count() const { return e1.size() + e2.size(); }

    EdgeType type(int u, int v) const {
        if (u == v) return EdgeType::None;
        return static_cast<EdgeType>(types_[static_cast<std::size_t>(u) * n + v]);
    }
    bool adjacent(int u, int v) const { return type(u, v) != EdgeType::None; }

    // Degrees per edge class.
    std::pair<int, int> degrees(int v) const {
        int d1 = 0, d2 = 0;
        for (int u = 0; u < n; ++u) {
            EdgeType t = type(v, u);
            if (t == EdgeType::E1) ++d1;
            if (t == EdgeType::E2) ++d2;
        }
        return {d1, d2};
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    EdgeGraph with_swapped_types() const { return EdgeGraph(n, e2, e1); }

    // Induced subgraph on `keep` (ascending); vertex i of the result is keep[i].
    EdgeGraph induced(const std::vector<int>& keep) const {
        std::vector<int> pos(n, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
        EdgeList a, b;
        for (auto [u, v] : e1)
            if (pos[u] >= 0 && pos[v] >= 0) a.emplace_back(pos[u], pos[v]);
        for (auto [u, v] : e2)
            if (pos[u] >= 0 && pos[v] >= 0) b.emplace_back(pos[u], pos[v]);
        return EdgeGraph(static_cast<int>(keep.size()), std::move(a), std::move(b));
    }

    // The same graph with vertices renamed by `perm` (new index = perm[old]).
    EdgeGraph relabeled(const std::vector<int>& perm) const {
        EdgeList a, b;
        for (auto [u, v] : e1) a.emplace_back(perm[u], perm[v]);
        for (auto [u, v] : e2) b.emplace_back(perm[u], perm[v]);
        return EdgeGraph(n, std::move(a), std::move(b));
    }

  private:
    std::vector<std::uint8_t> types_;

    void normalize(EdgeList& es) {
        for (auto& [u, v] : es) {
            if (u == v) throw std::invalid_argument("self-loop in edge list");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
    }

    void rebuild_types() {
        types_.assign(static_cast<std::size_t>(n) * n, 0);
        auto put = [&](const EdgeList& es, std::uint8_t t) {
            for (auto [u, v] : es) {
                std::size_t ij = static_cast<std::size_t>(u) * n + v;
                std::size_t ji = static_cast<std::size_t>(v) * n + u;
                if (types_[ij] != 0)
                    throw std::invalid_argument("edge listed in both classes: {" +
                                                std::to_string(u + 1) + "," +
                                                std::to_string(v + 1) + "}");
                types_[ij] = types_[ji] = t;
            }
        };
        put(e1, 1);
        put(e2, 2);
    }
};

inline bool clique_check(const EdgeGraph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

// All unordered pairs within s absent from both edge classes, sorted.
inline EdgeList non_edges_within(const EdgeGraph& g, const std::vector<int>& s) {
    std::vector<int> v(s);
    std::sort(v.begin(), v.end());
    EdgeList out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!g.adjacent(v[i], v[j])) out.emplace_back(v[i], v[j]);
    return out;
}

}  // namespace twodist
