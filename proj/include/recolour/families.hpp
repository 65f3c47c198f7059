#pragma once

#include <stdexcept>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

struct GadgetInstance {
    Graph graph;
    ListAssignment lists;
    std::vector<Vertex> special_vertices; // the small side, in index order
};

/// Colour-forcing gadget: K_{t, s^t - 1} where small-side vertex v_i gets
/// the list {(i-1)s+1, ..., i*s} and the large side carries every
/// transversal of those lists except the all-first one. In every proper
/// L-colouring the small side is forced onto the all-first transversal.
inline GadgetInstance forcing_gadget(int t, int s) {
    if (t < 2 || s < 2)
        throw std::invalid_argument("forcing_gadget: need t >= 2 and s >= 2");
    long long big = 1;
    for (int i = 0; i < t; ++i) {
        big *= s;
        if (big > 1'000'000)
            throw std::invalid_argument("forcing_gadget: s^t too large");
    }
    const int large = static_cast<int>(big - 1);
    Graph g(t + large);
    for (Vertex u = 0; u < t; ++u)
        for (Vertex w = 0; w < large; ++w)
            g.add_edge(u, t + w);
    std::vector<Vertex> small_side(t), large_side(large);
    for (int i = 0; i < t; ++i)
        small_side[i] = i;
    for (int i = 0; i < large; ++i)
        large_side[i] = t + i;
    g.set_bipartition(small_side, large_side);

    std::vector<std::vector<Colour>> lists(static_cast<std::size_t>(t + large));
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < s; ++c)
            lists[static_cast<std::size_t>(i)].push_back(i * s + c + 1);

    // Transversals in lexicographic order of the per-list offsets; offset
    // vector (0,...,0) is the skipped all-first transversal.
    std::vector<int> offset(static_cast<std::size_t>(t), 0);
    int next = t;
    while (true) {
        int pos = t - 1;
        while (pos >= 0 && offset[static_cast<std::size_t>(pos)] == s - 1)
            offset[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++offset[static_cast<std::size_t>(pos)];
        auto& list = lists[static_cast<std::size_t>(next++)];
        for (int i = 0; i < t; ++i)
            list.push_back(i * s + offset[static_cast<std::size_t>(i)] + 1);
    }

    return GadgetInstance{std::move(g), make_lists(std::move(lists)), std::move(small_side)};
}

struct PathChainInstance {
    Graph graph;
    ListAssignment lists;
};

/// P_k plus k copies of the (4,4) forcing gadget, path vertex p_i joined
/// to the special vertex of copy H_i. Path vertices get the list
/// {1, 17, 18, 19}, so the forced colour 1 on the special vertices pins
/// the path to an effective 3-colouring.
inline PathChainInstance path_plus_chain(int k) {
    if (k < 1)
        throw std::invalid_argument("path_plus_chain: need k >= 1");
    const GadgetInstance gadget = forcing_gadget(4, 4);
    const int copy_size = gadget.graph.vertex_count(); // 259
    Graph g(k + k * copy_size);
    for (Vertex v = 0; v + 1 < k; ++v)
        g.add_edge(v, v + 1);
    std::vector<std::vector<Colour>> lists(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < k; ++i)
        lists[static_cast<std::size_t>(i)] = {1, 17, 18, 19};
    for (int copy = 0; copy < k; ++copy) {
        const int base = k + copy * copy_size;
        for (const auto& [u, v] : gadget.graph.edges())
            g.add_edge(base + u, base + v);
        for (int v = 0; v < copy_size; ++v)
            lists[static_cast<std::size_t>(base + v)] = gadget.lists[static_cast<std::size_t>(v)];
        g.add_edge(copy, base + gadget.special_vertices.front());
    }
    return PathChainInstance{std::move(g), make_lists(std::move(lists))};
}

struct K18ListInstance {
    Graph graph;
    ListAssignment lists;
    Colouring alpha;
    Colouring beta;
};

/// The K_{18,18} list instance behind the diam C_L >= 55 separation: one
/// (u, v) pair per triple (i, j, l) with i in {1,3,5}, j in {2,4},
/// l in [5] \ {i, j}; both get the list [5] \ {l}, with
/// alpha(u) = i = beta(v) and beta(u) = j = alpha(v).
inline K18ListInstance k18_list_instance() {
    Graph g = complete_bipartite(18, 18);
    std::vector<std::vector<Colour>> lists(36);
    Colouring alpha(36), beta(36);
    int t = 0;
    for (int i : {1, 3, 5})
        for (int j : {2, 4})
            for (int l = 1; l <= 5; ++l) {
                if (l == i || l == j)
                    continue;
                std::vector<Colour> list;
                for (Colour c = 1; c <= 5; ++c)
                    if (c != l)
                        list.push_back(c);
                const Vertex u = t, v = 18 + t;
                lists[static_cast<std::size_t>(u)] = list;
                lists[static_cast<std::size_t>(v)] = list;
                alpha[static_cast<std::size_t>(u)] = i;
                beta[static_cast<std::size_t>(u)] = j;
                alpha[static_cast<std::size_t>(v)] = j;
                beta[static_cast<std::size_t>(v)] = i;
                ++t;
            }
    return K18ListInstance{std::move(g), make_lists(std::move(lists)), std::move(alpha), std::move(beta)};
}

struct FrozenListInstance {
    Graph graph;
    ListAssignment lists;
    Colouring phi;
};

/// K_{m,m} minus a matching with L(v_i) = L(w_i) = [m] \ {i} and the
/// frozen colouring phi(v_i) = phi(w_i) = (i mod m) + 1.
inline FrozenListInstance frozen_list_instance(int m) {
    if (m < 4)
        throw std::invalid_argument("frozen_list_instance: need m >= 4");
    Graph g = complete_bipartite_minus_matching(m);
    std::vector<std::vector<Colour>> lists(static_cast<std::size_t>(2 * m));
    Colouring phi(static_cast<std::size_t>(2 * m));
    for (int i = 1; i <= m; ++i) {
        std::vector<Colour> list;
        for (Colour c = 1; c <= m; ++c)
            if (c != i)
                list.push_back(c);
        lists[static_cast<std::size_t>(i - 1)] = list;
        lists[static_cast<std::size_t>(m + i - 1)] = list;
        const Colour shifted = i % m + 1;
        phi[static_cast<std::size_t>(i - 1)] = shifted;
        phi[static_cast<std::size_t>(m + i - 1)] = shifted;
    }
    return FrozenListInstance{std::move(g), make_lists(std::move(lists)), std::move(phi)};
}

} // namespace recolour
