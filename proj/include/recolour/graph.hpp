#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recolour {

using Vertex = int;
using Colour = int; // colours are 1-based positive integers

/// Undirected simple graph on vertices 0..n-1 with optional bipartition
/// metadata. Immutable once built (constructors below return finished
/// graphs); adjacency lists are kept sorted.
class Graph {
public:
    explicit Graph(int n) : adj_(check_order(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw std::invalid_argument("add_edge: duplicate edge");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    const std::vector<Vertex>& neighbours(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

    /// Edges as (u, v) pairs with u < v, in insertion order.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    /// Declares the bipartition (U, V). Every vertex must land in exactly
    /// one side and every edge must cross.
    void set_bipartition(std::vector<Vertex> u_side, std::vector<Vertex> v_side) {
        std::sort(u_side.begin(), u_side.end());
        std::sort(v_side.begin(), v_side.end());
        std::vector<char> side(adj_.size(), -1);
        for (Vertex v : u_side) {
            check_vertex(v);
            side[v] = 0;
        }
        for (Vertex v : v_side) {
            check_vertex(v);
            if (side[v] != -1)
                throw std::invalid_argument("set_bipartition: vertex in both sides");
            side[v] = 1;
        }
        for (std::size_t v = 0; v < side.size(); ++v)
            if (side[v] == -1)
                throw std::invalid_argument("set_bipartition: vertex " + std::to_string(v) + " in neither side");
        for (const auto& [a, b] : edges_)
            if (side[a] == side[b])
                throw std::invalid_argument("set_bipartition: edge inside one side");
        bipartition_ = std::make_pair(std::move(u_side), std::move(v_side));
    }

    const std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& bipartition() const {
        return bipartition_;
    }

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_ && bipartition_ == other.bipartition_;
    }

private:
    static std::size_t check_order(int n) {
        if (n < 0)
            throw std::invalid_argument("Graph: negative vertex count");
        return static_cast<std::size_t>(n);
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
        list.insert(std::upper_bound(list.begin(), list.end(), v), v);
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition_;
};

/// Attempts to 2-colour the graph; returns a bipartition (colour-0 side
/// first, each side sorted) or nullopt if some component has an odd cycle.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
infer_bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> side(n, -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            for (Vertex w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = static_cast<char>(1 - side[v]);
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

namespace detail {

// Kuhn's augmenting-path algorithm over an explicit bipartition.
inline int bipartite_matching(const Graph& g, const std::vector<Vertex>& u_side) {
    const int n = g.vertex_count();
    std::vector<Vertex> match(n, -1);
    std::vector<int> seen(n, -1);
    int round = 0;

    auto augment = [&](auto&& self, Vertex u) -> bool {
        for (Vertex w : g.neighbours(u)) {
            if (seen[w] == round)
                continue;
            seen[w] = round;
            if (match[w] == -1 || self(self, match[w])) {
                match[w] = u;
                match[u] = w;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (Vertex u : u_side) {
        ++round;
        if (match[u] == -1 && augment(augment, u))
            ++size;
    }
    return size;
}

// Branch on the lowest-indexed vertex that still has an unmatched
// neighbour: either leave it exposed or match it to one of them.
inline int exhaustive_matching(const Graph& g, std::vector<char>& used, Vertex from) {
    const int n = g.vertex_count();
    while (from < n && used[from])
        ++from;
    if (from >= n)
        return 0;
    int best = exhaustive_matching(g, used, from + 1);
    used[from] = 1;
    for (Vertex w : g.neighbours(from)) {
        if (used[w])
            continue;
        used[w] = 1;
        best = std::max(best, 1 + exhaustive_matching(g, used, from + 1));
        used[w] = 0;
    }
    used[from] = 0;
    return best;
}

} // namespace detail

/// Size of a maximum matching. Uses augmenting paths when a bipartition is
/// stored or can be inferred; otherwise falls back to exhaustive search,
/// which is only accepted up to 20 vertices.
inline int matching_number(const Graph& g) {
    if (g.bipartition())
        return detail::bipartite_matching(g, g.bipartition()->first);
    if (auto parts = infer_bipartition(g))
        return detail::bipartite_matching(g, parts->first);
    if (g.vertex_count() > 20)
        throw std::invalid_argument("matching_number: non-bipartite graph too large for exhaustive fallback");
    std::vector<char> used(g.vertex_count(), 0);
    return detail::exhaustive_matching(g, used, 0);
}

/// Degeneracy via min-degree elimination: the maximum, over the removal
/// order, of the degree at removal time.
inline int degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    int result = 0;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick]))
                pick = v;
        result = std::max(result, deg[pick]);
        removed[pick] = 1;
        for (Vertex w : g.neighbours(pick))
            if (!removed[w])
                --deg[w];
    }
    return result;
}

struct GraphStats {
    int n = 0;
    int m = 0;
    int matching_number = 0;
    int degeneracy = 0;
};

inline GraphStats graph_stats(const Graph& g) {
    return GraphStats{g.vertex_count(), g.edge_count(), matching_number(g), degeneracy(g)};
}

/// K_{p,q} with parts U = {0..p-1}, V = {p..p+q-1}.
inline Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("complete_bipartite: part sizes must be positive");
    Graph g(p + q);
    for (Vertex u = 0; u < p; ++u)
        for (Vertex v = 0; v < q; ++v)
            g.add_edge(u, p + v);
    std::vector<Vertex> us(p), vs(q);
    for (int i = 0; i < p; ++i)
        us[i] = i;
    for (int i = 0; i < q; ++i)
        vs[i] = p + i;
    g.set_bipartition(std::move(us), std::move(vs));
    return g;
}

/// K_{m,m} minus the perfect matching {i, m+i}: vertex i is adjacent to
/// m+j exactly when i != j.
inline Graph complete_bipartite_minus_matching(int m) {
    if (m < 2)
        throw std::invalid_argument("complete_bipartite_minus_matching: need m >= 2");
    Graph g(2 * m);
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = 0; j < m; ++j)
            if (i != j)
                g.add_edge(i, m + j);
    std::vector<Vertex> us(m), vs(m);
    for (int i = 0; i < m; ++i) {
        us[i] = i;
        vs[i] = m + i;
    }
    g.set_bipartition(std::move(us), std::move(vs));
    return g;
}

/// Path on vertices 0..n-1.
inline Graph path(int n) {
    if (n < 1)
        throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    std::vector<Vertex> even, odd;
    for (Vertex v = 0; v < n; ++v)
        (v % 2 == 0 ? even : odd).push_back(v);
    g.set_bipartition(std::move(even), std::move(odd));
    return g;
}

/// The fixed 10-vertex layered graph: root r (vertex 0) adjacent to
/// a1..a3 (1..3), a_i adjacent to b_j (4..6) iff i != j, b_i adjacent to
/// c_j (7..9) iff i != j.
inline Graph layered_example() {
    Graph g(10);
    for (int i = 1; i <= 3; ++i)
        g.add_edge(0, i);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j)
                g.add_edge(i, 3 + j);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j)
                g.add_edge(3 + i, 6 + j);
    g.set_bipartition({0, 4, 5, 6}, {1, 2, 3, 7, 8, 9});
    return g;
}

} // namespace recolour
