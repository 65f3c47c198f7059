#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

/// Total colour assignment, indexed by vertex. Colours are 1-based.
using Colouring = std::vector<Colour>;

/// Per-vertex admissible colour sets, indexed by vertex. Each list is kept
/// sorted and duplicate-free.
using ListAssignment = std::vector<std::vector<Colour>>;

inline ListAssignment make_lists(std::vector<std::vector<Colour>> raw) {
    for (auto& list : raw) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.empty())
            throw std::invalid_argument("ListAssignment: empty list");
        if (list.front() < 1)
            throw std::invalid_argument("ListAssignment: colours must be positive");
    }
    return raw;
}

/// Admissible colours per vertex: either Uniform(k), i.e. [k] everywhere,
/// or an explicit list assignment.
class Palette {
public:
    static Palette uniform(int k) {
        if (k < 1)
            throw std::invalid_argument("Palette: need k >= 1");
        Palette p;
        p.k_ = k;
        return p;
    }

    static Palette lists(ListAssignment l) {
        if (l.empty())
            throw std::invalid_argument("Palette: empty list assignment");
        Palette p;
        p.lists_ = make_lists(std::move(l));
        return p;
    }

    bool is_uniform() const { return k_ > 0; }
    int k() const { return k_; }

    const ListAssignment& list_assignment() const {
        if (is_uniform())
            throw std::invalid_argument("Palette: uniform palette has no lists");
        return lists_;
    }

    /// Number of vertices the palette constrains; -1 for uniform (any).
    int size() const { return is_uniform() ? -1 : static_cast<int>(lists_.size()); }

    bool admits(Vertex v, Colour c) const {
        if (is_uniform())
            return c >= 1 && c <= k_;
        const auto& list = lists_.at(static_cast<std::size_t>(v));
        return std::binary_search(list.begin(), list.end(), c);
    }

    /// Largest admissible colour anywhere.
    Colour max_colour() const {
        if (is_uniform())
            return k_;
        Colour m = 0;
        for (const auto& list : lists_)
            m = std::max(m, list.back());
        return m;
    }

    template <class Fn>
    void for_each_admissible(Vertex v, Fn&& fn) const {
        if (is_uniform()) {
            for (Colour c = 1; c <= k_; ++c)
                fn(c);
        } else {
            for (Colour c : lists_.at(static_cast<std::size_t>(v)))
                fn(c);
        }
    }

private:
    Palette() = default;

    int k_ = 0;
    ListAssignment lists_;
};

inline void check_length(const Graph& g, const Colouring& c, const char* where) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument(std::string(where) + ": colouring length does not match graph order");
}

/// True iff no edge has equal endpoint colours.
inline bool is_proper(const Graph& g, const Colouring& c) {
    check_length(g, c, "is_proper");
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

/// True iff c(v) is in L(v) for every vertex.
inline bool respects_lists(const ListAssignment& l, const Colouring& c) {
    if (l.size() != c.size())
        throw std::invalid_argument("respects_lists: length mismatch");
    for (std::size_t v = 0; v < c.size(); ++v)
        if (!std::binary_search(l[v].begin(), l[v].end(), c[v]))
            return false;
    return true;
}

inline bool respects_palette(const Palette& p, const Colouring& c) {
    if (!p.is_uniform() && p.list_assignment().size() != c.size())
        throw std::invalid_argument("respects_palette: length mismatch");
    for (std::size_t v = 0; v < c.size(); ++v)
        if (!p.admits(static_cast<Vertex>(v), c[v]))
            return false;
    return true;
}

/// Preimage partition keyed by colour value; colours with empty preimage
/// are omitted.
inline std::map<Colour, std::vector<Vertex>> colour_classes(const Colouring& c) {
    std::map<Colour, std::vector<Vertex>> classes;
    for (std::size_t v = 0; v < c.size(); ++v)
        classes[c[v]].push_back(static_cast<Vertex>(v));
    return classes;
}

namespace detail {

// Relabels colours by first occurrence along the vertex order; two
// colourings induce the same partition exactly when their canonical
// forms coincide.
inline Colouring canonical_form(const Colouring& c) {
    std::map<Colour, Colour> relabel;
    Colouring out(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
        auto [it, inserted] = relabel.try_emplace(c[v], static_cast<Colour>(relabel.size() + 1));
        out[v] = it->second;
    }
    return out;
}

} // namespace detail

/// True iff the two colourings induce the same unordered set of colour
/// classes.
inline bool same_partition(const Colouring& a, const Colouring& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("same_partition: length mismatch");
    return detail::canonical_form(a) == detail::canonical_form(b);
}

/// True iff no single vertex can be recoloured to a different admissible
/// colour while keeping the colouring proper. Input must itself be proper
/// and palette-respecting.
inline bool is_frozen(const Graph& g, const Colouring& c, const Palette& p) {
    check_length(g, c, "is_frozen");
    if (!is_proper(g, c))
        throw std::invalid_argument("is_frozen: colouring is not proper");
    if (!respects_palette(p, c))
        throw std::invalid_argument("is_frozen: colouring does not respect the palette");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        bool movable = false;
        p.for_each_admissible(v, [&](Colour d) {
            if (movable || d == c[v])
                return;
            for (Vertex w : g.neighbours(v))
                if (c[w] == d)
                    return;
            movable = true;
        });
        if (movable)
            return false;
    }
    return true;
}

/// The Def-3.1 colour sets over a vertex subset: C1 = colours used by
/// both endpoint colourings, C2 only by a, C3 only by b. The sets are
/// reported as defined (C2 from a, C3 from b); `swapped` signals that
/// |C3| < |C2| and the roles of a and b must be exchanged downstream.
struct ColourSplit {
    std::vector<Colour> c1;
    std::vector<Colour> c2;
    std::vector<Colour> c3;
    bool swapped = false;
};

inline ColourSplit colour_split(const Colouring& a, const Colouring& b, const std::vector<Vertex>& part) {
    if (a.size() != b.size())
        throw std::invalid_argument("colour_split: length mismatch");
    std::set<Colour> ca, cb;
    for (Vertex v : part) {
        ca.insert(a.at(static_cast<std::size_t>(v)));
        cb.insert(b.at(static_cast<std::size_t>(v)));
    }
    ColourSplit s;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(s.c1));
    std::set_difference(ca.begin(), ca.end(), s.c1.begin(), s.c1.end(), std::back_inserter(s.c2));
    std::set_difference(cb.begin(), cb.end(), s.c1.begin(), s.c1.end(), std::back_inserter(s.c3));
    s.swapped = s.c3.size() < s.c2.size();
    return s;
}

} // namespace recolour
