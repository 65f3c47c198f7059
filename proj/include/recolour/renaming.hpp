#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/explorer.hpp"
#include "recolour/graph.hpp"

namespace recolour {

/// Auxiliary digraph on colour classes: an arc (i, j) means class i's
/// current colour is class j's target colour, so i must vacate before j
/// can take it. In- and out-degree are at most 1, so the digraph splits
/// into directed paths and cycles.
struct RenamingDigraph {
    struct Node {
        std::vector<Vertex> vertices; // ascending
        Colour alpha_colour = 0;
        Colour beta_colour = 0;
    };
    std::vector<Node> nodes;                    // ordered by smallest contained vertex
    std::vector<std::pair<int, int>> arcs;      // (i, j) with alpha(C_i) == beta(C_j)
    std::vector<int> successor;                 // arc out of i, or -1
    std::vector<int> predecessor;               // arc into i, or -1
};

inline RenamingDigraph build_renaming_digraph(const Colouring& a, const Colouring& b) {
    if (!same_partition(a, b))
        throw std::invalid_argument("build_renaming_digraph: colourings induce different partitions");
    RenamingDigraph d;
    std::set<Colour> seen;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (!seen.insert(a[v]).second)
            continue;
        RenamingDigraph::Node node;
        node.alpha_colour = a[v];
        node.beta_colour = b[v];
        for (std::size_t w = v; w < a.size(); ++w)
            if (a[w] == a[v])
                node.vertices.push_back(static_cast<Vertex>(w));
        d.nodes.push_back(std::move(node));
    }
    const int k = static_cast<int>(d.nodes.size());
    d.successor.assign(static_cast<std::size_t>(k), -1);
    d.predecessor.assign(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && d.nodes[static_cast<std::size_t>(i)].alpha_colour == d.nodes[static_cast<std::size_t>(j)].beta_colour) {
                d.arcs.emplace_back(i, j);
                d.successor[static_cast<std::size_t>(i)] = j;
                d.predecessor[static_cast<std::size_t>(j)] = i;
            }
    return d;
}

/// Recolours a to b (same class partition) in C_ell(G) using at most
/// floor(3n/2) steps, each vertex recoloured at most twice: directed
/// paths are emptied tip-first, each directed cycle parks its smallest
/// class on a free colour, walks the cycle, then restores the parked
/// class.
inline RecolouringSequence optimal_renaming(const Graph& g, const Colouring& a, const Colouring& b, int ell) {
    check_length(g, a, "optimal_renaming");
    check_length(g, b, "optimal_renaming");
    if (!is_proper(g, a) || !is_proper(g, b))
        throw std::invalid_argument("optimal_renaming: endpoint colourings must be proper");
    RenamingDigraph d = build_renaming_digraph(a, b);
    const int k = static_cast<int>(d.nodes.size());
    for (const Colouring* c : {&a, &b})
        for (Colour col : *c)
            if (col > ell)
                throw std::invalid_argument("optimal_renaming: endpoint colour exceeds ell");
    if (ell < k + 1)
        throw std::invalid_argument("optimal_renaming: need ell >= number of colour classes + 1");

    RecolouringSequence seq;
    seq.start = a;
    Colouring cur = a;

    auto recolour_class = [&](int idx, Colour target) {
        for (Vertex v : d.nodes[static_cast<std::size_t>(idx)].vertices) {
            if (cur[static_cast<std::size_t>(v)] == target)
                continue;
            cur[static_cast<std::size_t>(v)] = target;
            seq.steps.push_back(Step{v, target});
        }
    };

    auto smallest_free_colour = [&]() {
        std::set<Colour> used(cur.begin(), cur.end());
        for (Colour c = 1; c <= ell; ++c)
            if (!used.count(c))
                return c;
        throw std::logic_error("optimal_renaming: no free colour; ell precondition violated");
    };

    std::vector<char> done(static_cast<std::size_t>(k), 0);

    // Directed paths, tip (in-degree 0) first.
    for (int tip = 0; tip < k; ++tip) {
        if (d.predecessor[static_cast<std::size_t>(tip)] != -1)
            continue;
        for (int i = tip; i != -1; i = d.successor[static_cast<std::size_t>(i)]) {
            recolour_class(i, d.nodes[static_cast<std::size_t>(i)].beta_colour);
            done[static_cast<std::size_t>(i)] = 1;
        }
    }

    // Remaining classes sit on directed cycles. Process each cycle once,
    // starting from its minimum-size class (ties by smallest vertex).
    for (int i = 0; i < k; ++i) {
        if (done[static_cast<std::size_t>(i)])
            continue;
        std::vector<int> cycle{i};
        for (int j = d.successor[static_cast<std::size_t>(i)]; j != i; j = d.successor[static_cast<std::size_t>(j)])
            cycle.push_back(j);
        std::size_t park_pos = 0;
        for (std::size_t pos = 1; pos < cycle.size(); ++pos) {
            const auto& cand = d.nodes[static_cast<std::size_t>(cycle[pos])];
            const auto& best = d.nodes[static_cast<std::size_t>(cycle[park_pos])];
            if (std::make_pair(cand.vertices.size(), cand.vertices.front()) <
                std::make_pair(best.vertices.size(), best.vertices.front()))
                park_pos = pos;
        }
        std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(park_pos), cycle.end());
        recolour_class(cycle.front(), smallest_free_colour());
        for (std::size_t pos = 1; pos < cycle.size(); ++pos)
            recolour_class(cycle[pos], d.nodes[static_cast<std::size_t>(cycle[pos])].beta_colour);
        recolour_class(cycle.front(), d.nodes[static_cast<std::size_t>(cycle.front())].beta_colour);
        for (int j : cycle)
            done[static_cast<std::size_t>(j)] = 1;
    }

    return seq;
}

} // namespace recolour
