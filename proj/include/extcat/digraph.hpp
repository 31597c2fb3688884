#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "extcat/caps.hpp"
#include "extcat/errors.hpp"

namespace extcat {

/// A vertex of a bipartite digraph: side 0 = X, side 1 = Y, plus index.
struct Vertex {
    int side;
    std::size_t index;
    auto operator<=>(const Vertex&) const = default;
};

/// Bipartite digraph D(X, Y; E): edges run only across the two sides, in
/// either direction.
struct BipartiteDigraph {
    std::vector<std::string> X;
    std::vector<std::string> Y;
    std::set<std::pair<std::size_t, std::size_t>> edges_xy; // (x index, y index)
    std::set<std::pair<std::size_t, std::size_t>> edges_yx; // (y index, x index)

    void add_edge(Vertex from, Vertex to) {
        if (from.side == to.side)
            throw std::invalid_argument("bipartite digraph: edge within one side");
        check(from);
        check(to);
        if (from.side == 0)
            edges_xy.emplace(from.index, to.index);
        else
            edges_yx.emplace(from.index, to.index);
    }
    void check(Vertex v) const {
        const std::size_t n = v.side == 0 ? X.size() : Y.size();
        if (v.index >= n) throw UnknownVertex("vertex index out of range");
    }
};

/// Out-neighborhood: all edge-successors of the vertices in T.
inline std::set<Vertex> out_neighborhood(const BipartiteDigraph& d,
                                         const std::set<Vertex>& T) {
    std::set<Vertex> out;
    for (Vertex v : T) {
        d.check(v);
        if (v.side == 0) {
            for (const auto& [x, y] : d.edges_xy)
                if (x == v.index) out.insert(Vertex{1, y});
        } else {
            for (const auto& [y, x] : d.edges_yx)
                if (y == v.index) out.insert(Vertex{0, x});
        }
    }
    return out;
}

struct HallResult {
    bool holds;
    std::set<Vertex> violating; // non-empty iff !holds
};

namespace detail {

/// Maximum matching by augmenting paths in a bipartite graph given as
/// adjacency lists from left side (size n) into right side (size m).
/// Augmenting in ascending left-index order keeps the result deterministic.
inline std::vector<std::size_t> max_matching(const std::vector<std::vector<std::size_t>>& adj,
                                             std::size_t m) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> match_right(m, SIZE_MAX), match_left(n, SIZE_MAX);
    std::vector<char> visited;
    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] == SIZE_MAX || self(self, match_right[v])) {
                match_right[v] = u;
                match_left[u] = v;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        visited.assign(m, 0);
        augment(augment, u);
    }
    return match_left;
}

/// Deficiency witness: left vertices reachable by alternating paths from an
/// unsaturated left vertex form a set T with |T| > |N(T)|.
inline std::vector<std::size_t> deficiency_set(const std::vector<std::vector<std::size_t>>& adj,
                                               std::size_t m,
                                               const std::vector<std::size_t>& match_left,
                                               std::size_t unsaturated) {
    std::vector<std::size_t> match_right(m, SIZE_MAX);
    for (std::size_t u = 0; u < adj.size(); ++u)
        if (match_left[u] != SIZE_MAX) match_right[match_left[u]] = u;
    std::vector<char> seen_left(adj.size(), 0), seen_right(m, 0);
    std::vector<std::size_t> stack{unsaturated};
    seen_left[unsaturated] = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u]) {
            if (seen_right[v]) continue;
            seen_right[v] = 1;
            if (match_right[v] != SIZE_MAX && !seen_left[match_right[v]]) {
                seen_left[match_right[v]] = 1;
                stack.push_back(match_right[v]);
            }
        }
    }
    std::vector<std::size_t> T;
    for (std::size_t u = 0; u < adj.size(); ++u)
        if (seen_left[u]) T.push_back(u);
    return T;
}

inline std::vector<std::vector<std::size_t>> side_adjacency(const BipartiteDigraph& d,
                                                            int side) {
    if (side == 0) {
        std::vector<std::vector<std::size_t>> adj(d.X.size());
        for (const auto& [x, y] : d.edges_xy) adj[x].push_back(y);
        return adj;
    }
    std::vector<std::vector<std::size_t>> adj(d.Y.size());
    for (const auto& [y, x] : d.edges_yx) adj[y].push_back(x);
    return adj;
}

} // namespace detail

/// Hall condition |T| <= |N+(T)| for every T. Bipartiteness lets the check
/// run over subsets of X and subsets of Y separately.
inline HallResult hall_condition_brute(const BipartiteDigraph& d, const Caps& caps = Caps{}) {
    if (d.X.size() + d.Y.size() > caps.digraph_vertices)
        throw CapExceeded("hall_condition: vertex count exceeds brute-force cap");
    for (int side = 0; side < 2; ++side) {
        const std::size_t n = side == 0 ? d.X.size() : d.Y.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::set<Vertex> T;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) T.insert(Vertex{side, i});
            if (out_neighborhood(d, T).size() < T.size()) return {false, T};
        }
    }
    return {true, {}};
}

/// Same condition decided via maximum matching on each side (Hall's theorem).
inline HallResult hall_condition_matching(const BipartiteDigraph& d) {
    for (int side = 0; side < 2; ++side) {
        const auto adj = detail::side_adjacency(d, side);
        const std::size_t m = side == 0 ? d.Y.size() : d.X.size();
        const auto match_left = detail::max_matching(adj, m);
        for (std::size_t u = 0; u < adj.size(); ++u) {
            if (match_left[u] != SIZE_MAX) continue;
            std::set<Vertex> T;
            for (std::size_t t : detail::deficiency_set(adj, m, match_left, u))
                T.insert(Vertex{side, t});
            return {false, T};
        }
    }
    return {true, {}};
}

inline HallResult hall_condition(const BipartiteDigraph& d, const Caps& caps = Caps{}) {
    if (d.X.size() + d.Y.size() <= caps.digraph_vertices) return hall_condition_brute(d, caps);
    return hall_condition_matching(d);
}

/// Strongly connected component ids over X + Y (X first), by Kosaraju.
inline std::vector<std::size_t> scc_ids(const BipartiteDigraph& d) {
    const std::size_t n = d.X.size(), total = n + d.Y.size();
    std::vector<std::vector<std::size_t>> fwd(total), rev(total);
    for (const auto& [x, y] : d.edges_xy) {
        fwd[x].push_back(n + y);
        rev[n + y].push_back(x);
    }
    for (const auto& [y, x] : d.edges_yx) {
        fwd[n + y].push_back(x);
        rev[x].push_back(n + y);
    }
    std::vector<char> seen(total, 0);
    std::vector<std::size_t> order;
    auto dfs1 = [&](auto&& self, std::size_t u) -> void {
        seen[u] = 1;
        for (std::size_t v : fwd[u])
            if (!seen[v]) self(self, v);
        order.push_back(u);
    };
    for (std::size_t u = 0; u < total; ++u)
        if (!seen[u]) dfs1(dfs1, u);
    std::vector<std::size_t> comp(total, SIZE_MAX);
    std::size_t ncomp = 0;
    auto dfs2 = [&](auto&& self, std::size_t u, std::size_t c) -> void {
        comp[u] = c;
        for (std::size_t v : rev[u])
            if (comp[v] == SIZE_MAX) self(self, v, c);
    };
    for (std::size_t i = order.size(); i-- > 0;)
        if (comp[order[i]] == SIZE_MAX) dfs2(dfs2, order[i], ncomp++);
    return comp;
}

struct RelabelResult {
    bool success;
    std::vector<std::pair<std::size_t, std::size_t>> pairing; // (x index, y index)
    std::set<Vertex> violating;                               // on failure
};

/// The Krull-Schmidt relabeling: under the Hall condition, |X| = |Y| and a
/// perfect matching pairs each x with a mutually reachable y. Failure of the
/// matching despite Hall would contradict the proved statement.
inline RelabelResult ks_relabel(const BipartiteDigraph& d, const Caps& caps = Caps{}) {
    const HallResult hall = hall_condition(d, caps);
    if (!hall.holds) return {false, {}, hall.violating};
    if (d.X.size() != d.Y.size())
        throw TheoremViolation("ks_relabel: Hall holds but |X| != |Y|");
    const auto comp = scc_ids(d);
    std::vector<std::vector<std::size_t>> adj(d.X.size());
    for (std::size_t x = 0; x < d.X.size(); ++x)
        for (std::size_t y = 0; y < d.Y.size(); ++y)
            if (comp[x] == comp[d.X.size() + y]) adj[x].push_back(y);
    const auto match_left = detail::max_matching(adj, d.Y.size());
    RelabelResult r;
    r.success = true;
    for (std::size_t x = 0; x < d.X.size(); ++x) {
        if (match_left[x] == SIZE_MAX)
            throw TheoremViolation("ks_relabel: Hall holds but no mutual-reachability pairing");
        r.pairing.emplace_back(x, match_left[x]);
    }
    return r;
}

} // namespace extcat
