#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"

namespace recolour {

struct Step {
    Vertex vertex = 0;
    Colour colour = 0;
    bool operator==(const Step&) const = default;
};

/// An edge-path in the reconfiguration graph: a start colouring plus
/// single-vertex recolouring steps.
struct RecolouringSequence {
    Colouring start;
    std::vector<Step> steps;

    std::size_t length() const { return steps.size(); }

    Colouring final_colouring() const {
        Colouring c = start;
        for (const Step& s : steps)
            c.at(static_cast<std::size_t>(s.vertex)) = s.colour;
        return c;
    }
};

struct ExplorerOptions {
    std::uint64_t state_budget;
    std::uint64_t search_budget; // Hamiltonicity search-tree nodes
    int workers;

    ExplorerOptions()
        : state_budget(env_budget(100'000'000ULL)),
          search_budget(env_budget(1'000'000'000ULL)),
          workers(0) {}

    static std::uint64_t env_budget(std::uint64_t fallback) {
        if (const char* s = std::getenv("RECOLOUR_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0)
                return v;
        }
        return fallback;
    }

    int effective_workers() const {
        if (workers > 0)
            return workers;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

namespace detail {

using StateCode = unsigned __int128;

struct StateCodeHash {
    std::size_t operator()(StateCode c) const noexcept {
        std::uint64_t x = static_cast<std::uint64_t>(c) ^ (static_cast<std::uint64_t>(c >> 64) * 0x9e3779b97f4a7c15ULL);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

// Fixed-width packing of a colouring, vertex 0 in the most significant
// slot so that numeric order of codes equals lexicographic order of
// assignment vectors.
class StateCodec {
public:
    static int bits_needed(Colour max_colour) {
        int bits = 1;
        while ((1 << bits) <= max_colour)
            ++bits;
        return bits;
    }

    static bool fits(int n, Colour max_colour) { return n * bits_needed(max_colour) <= 128; }

    StateCodec(int n, Colour max_colour) : n_(n), bits_(bits_needed(max_colour)) {
        if (n_ * bits_ > 128)
            throw std::invalid_argument("state space too wide to pack (needs > 128 bits)");
    }

    StateCode encode(const Colouring& c) const {
        StateCode code = 0;
        for (int v = 0; v < n_; ++v)
            code = (code << bits_) | static_cast<unsigned>(c[static_cast<std::size_t>(v)]);
        return code;
    }

    void decode(StateCode code, Colouring& out) const {
        out.resize(static_cast<std::size_t>(n_));
        const StateCode mask = (StateCode{1} << bits_) - 1;
        for (int v = n_ - 1; v >= 0; --v) {
            out[static_cast<std::size_t>(v)] = static_cast<Colour>(code & mask);
            code >>= bits_;
        }
    }

    StateCode with_colour(StateCode code, Vertex v, Colour c) const {
        const int shift = bits_ * (n_ - 1 - v);
        const StateCode mask = ((StateCode{1} << bits_) - 1) << shift;
        return (code & ~mask) | (static_cast<StateCode>(c) << shift);
    }

    int n() const { return n_; }

private:
    int n_;
    int bits_;
};

inline void check_palette_size(const Graph& g, const Palette& p) {
    if (!p.is_uniform() && p.size() != g.vertex_count())
        throw std::invalid_argument("palette list count does not match graph order");
}

inline void check_state(const Graph& g, const Palette& p, const Colouring& c, const char* where) {
    check_length(g, c, where);
    if (!is_proper(g, c))
        throw std::invalid_argument(std::string(where) + ": colouring is not proper");
    if (!respects_palette(p, c))
        throw std::invalid_argument(std::string(where) + ": colouring does not respect the palette");
}

} // namespace detail

/// Visits every proper palette-respecting colouring exactly once, in
/// lexicographic order of the assignment vector. The visitor returns
/// false to stop early; the function reports whether the enumeration ran
/// to completion.
template <class Fn>
bool enumerate_colourings(const Graph& g, const Palette& p, Fn&& visit) {
    detail::check_palette_size(g, p);
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbours(v))
            if (w < v)
                earlier[static_cast<std::size_t>(v)].push_back(w);
    Colouring c(static_cast<std::size_t>(n), 0);

    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n)
            return visit(static_cast<const Colouring&>(c));
        bool keep_going = true;
        p.for_each_admissible(v, [&](Colour col) {
            if (!keep_going)
                return;
            for (Vertex w : earlier[static_cast<std::size_t>(v)])
                if (c[static_cast<std::size_t>(w)] == col)
                    return;
            c[static_cast<std::size_t>(v)] = col;
            keep_going = self(self, v + 1);
        });
        c[static_cast<std::size_t>(v)] = 0;
        return keep_going;
    };
    return rec(rec, 0);
}

inline std::vector<Colouring> enumerate_colourings(const Graph& g, const Palette& p) {
    std::vector<Colouring> out;
    enumerate_colourings(g, p, [&](const Colouring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

/// All proper palette-respecting colourings at Hamming distance exactly 1
/// from c, ordered by (vertex, colour).
inline std::vector<Colouring> neighbours(const Graph& g, const Palette& p, const Colouring& c) {
    detail::check_palette_size(g, p);
    detail::check_state(g, p, c, "neighbours");
    std::vector<Colouring> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        p.for_each_admissible(v, [&](Colour d) {
            if (d == c[static_cast<std::size_t>(v)])
                return;
            for (Vertex w : g.neighbours(v))
                if (c[static_cast<std::size_t>(w)] == d)
                    return;
            Colouring next = c;
            next[static_cast<std::size_t>(v)] = d;
            out.push_back(std::move(next));
        });
    }
    return out;
}

struct VerifyReport {
    bool valid = false;
    std::uint64_t length = 0;
    std::vector<int> per_vertex_counts;
    std::optional<std::size_t> failure_step; // first failing step (0-based)
    bool start_ok = false;
    bool target_reached = false;
};

/// Replays a sequence, checking that every prefix stays proper and
/// palette-respecting, that each step really changes its vertex, and
/// that the final colouring equals the target. Invalid sequences are
/// reported, not thrown.
inline VerifyReport verify_sequence(const Graph& g, const Palette& p, const RecolouringSequence& seq,
                                    const Colouring& target) {
    detail::check_palette_size(g, p);
    check_length(g, seq.start, "verify_sequence");
    check_length(g, target, "verify_sequence");
    VerifyReport report;
    report.length = seq.steps.size();
    report.per_vertex_counts.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    report.start_ok = is_proper(g, seq.start) && respects_palette(p, seq.start);
    if (!report.start_ok)
        return report;

    Colouring c = seq.start;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& s = seq.steps[i];
        const bool vertex_ok = s.vertex >= 0 && s.vertex < g.vertex_count();
        bool ok = vertex_ok && s.colour != c[static_cast<std::size_t>(s.vertex)] && p.admits(s.vertex, s.colour);
        if (ok)
            for (Vertex w : g.neighbours(s.vertex))
                if (c[static_cast<std::size_t>(w)] == s.colour) {
                    ok = false;
                    break;
                }
        if (!ok) {
            report.failure_step = i;
            return report;
        }
        c[static_cast<std::size_t>(s.vertex)] = s.colour;
        ++report.per_vertex_counts[static_cast<std::size_t>(s.vertex)];
    }
    report.target_reached = (c == target);
    report.valid = report.target_reached;
    return report;
}

/// The reconfiguration graph made explicit: packed states in ascending
/// (= lexicographic) order plus CSR adjacency.
class StateSpace {
public:
    /// Builds the full node and edge set. Returns nullopt when the node
    /// count would exceed the budget or the states cannot be packed.
    static std::optional<StateSpace> build(const Graph& g, const Palette& p, std::uint64_t state_budget) {
        detail::check_palette_size(g, p);
        if (!detail::StateCodec::fits(g.vertex_count(), p.max_colour()))
            return std::nullopt;
        StateSpace s(g, p);
        bool complete = enumerate_colourings(g, p, [&](const Colouring& c) {
            if (s.codes_.size() >= state_budget)
                return false;
            s.codes_.push_back(s.codec_.encode(c));
            return true;
        });
        if (!complete)
            return std::nullopt;
        s.build_adjacency(g, p);
        return s;
    }

    std::size_t node_count() const { return codes_.size(); }

    Colouring colouring_at(std::size_t idx) const {
        Colouring c;
        codec_.decode(codes_.at(idx), c);
        return c;
    }

    std::optional<std::size_t> index_of(const Colouring& c) const {
        const detail::StateCode code = codec_.encode(c);
        auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
        if (it == codes_.end() || *it != code)
            return std::nullopt;
        return static_cast<std::size_t>(it - codes_.begin());
    }

    std::size_t degree(std::size_t idx) const { return offsets_[idx + 1] - offsets_[idx]; }

    const std::uint32_t* adjacency_begin(std::size_t idx) const { return adjacency_.data() + offsets_[idx]; }
    const std::uint32_t* adjacency_end(std::size_t idx) const { return adjacency_.data() + offsets_[idx + 1]; }

    std::uint64_t edge_count() const { return adjacency_.size() / 2; }

private:
    StateSpace(const Graph& g, const Palette& p) : codec_(g.vertex_count(), p.max_colour()) {}

    void build_adjacency(const Graph& g, const Palette& p) {
        const int n = g.vertex_count();
        offsets_.assign(codes_.size() + 1, 0);
        Colouring c;
        for (std::size_t i = 0; i < codes_.size(); ++i) {
            codec_.decode(codes_[i], c);
            for (Vertex v = 0; v < n; ++v) {
                p.for_each_admissible(v, [&](Colour d) {
                    if (d == c[static_cast<std::size_t>(v)])
                        return;
                    for (Vertex w : g.neighbours(v))
                        if (c[static_cast<std::size_t>(w)] == d)
                            return;
                    const detail::StateCode code = codec_.with_colour(codes_[i], v, d);
                    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
                    adjacency_.push_back(static_cast<std::uint32_t>(it - codes_.begin()));
                    ++offsets_[i + 1];
                });
            }
        }
        for (std::size_t i = 1; i <= codes_.size(); ++i)
            offsets_[i] += offsets_[i - 1];
        for (std::size_t i = 0; i < codes_.size(); ++i)
            std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                      adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }

    detail::StateCodec codec_;
    std::vector<detail::StateCode> codes_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
};

enum class SearchStatus { done, budget_exhausted };

struct ComponentsReport {
    SearchStatus status = SearchStatus::done;
    std::uint64_t node_count = 0;
    std::uint64_t component_count = 0;
    std::vector<std::uint64_t> sizes;          // in discovery order
    std::vector<Colouring> representatives;    // lexicographically least per component
};

namespace detail {

inline std::pair<std::vector<std::uint32_t>, std::uint64_t> component_labels(const StateSpace& space) {
    const std::size_t n = space.node_count();
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    std::vector<std::uint32_t> queue;
    std::uint64_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != UINT32_MAX)
            continue;
        const auto id = static_cast<std::uint32_t>(count++);
        label[s] = id;
        queue.assign(1, static_cast<std::uint32_t>(s));
        while (!queue.empty()) {
            const std::uint32_t x = queue.back();
            queue.pop_back();
            for (const std::uint32_t* it = space.adjacency_begin(x); it != space.adjacency_end(x); ++it)
                if (label[*it] == UINT32_MAX) {
                    label[*it] = id;
                    queue.push_back(*it);
                }
        }
    }
    return {std::move(label), count};
}

} // namespace detail

/// Connected components of the reconfiguration graph.
inline ComponentsReport components(const Graph& g, const Palette& p, const ExplorerOptions& options = {}) {
    ComponentsReport report;
    auto space = StateSpace::build(g, p, options.state_budget);
    if (!space) {
        report.status = SearchStatus::budget_exhausted;
        return report;
    }
    report.node_count = space->node_count();
    auto [label, count] = detail::component_labels(*space);
    report.component_count = count;
    report.sizes.assign(count, 0);
    report.representatives.resize(count);
    std::vector<char> seen(count, 0);
    for (std::size_t i = 0; i < label.size(); ++i) {
        ++report.sizes[label[i]];
        if (!seen[label[i]]) {
            seen[label[i]] = 1;
            report.representatives[label[i]] = space->colouring_at(i);
        }
    }
    return report;
}

struct MetricsReport {
    SearchStatus status = SearchStatus::done;
    std::uint64_t node_count = 0;
    bool connected = true;
    std::uint64_t component_count = 0;
    std::optional<std::uint64_t> diameter; // nullopt = infinite (disconnected)
    std::optional<std::uint64_t> radius;
    std::optional<std::pair<Colouring, Colouring>> witness_pair;
};

namespace detail {

// One BFS over the explicit graph; returns the eccentricity and the
// smallest farthest node index.
struct BfsScratch {
    std::vector<std::uint32_t> dist;
    std::vector<std::uint32_t> queue;
};

inline std::pair<std::uint32_t, std::uint32_t> bfs_eccentricity(const StateSpace& space, std::uint32_t source,
                                                                BfsScratch& scratch) {
    const std::size_t n = space.node_count();
    scratch.dist.assign(n, UINT32_MAX);
    scratch.queue.resize(n);
    std::size_t head = 0, tail = 0;
    scratch.dist[source] = 0;
    scratch.queue[tail++] = source;
    std::uint32_t ecc = 0, farthest = source;
    while (head < tail) {
        const std::uint32_t x = scratch.queue[head++];
        const std::uint32_t dx = scratch.dist[x];
        for (const std::uint32_t* it = space.adjacency_begin(x); it != space.adjacency_end(x); ++it) {
            if (scratch.dist[*it] == UINT32_MAX) {
                scratch.dist[*it] = dx + 1;
                scratch.queue[tail++] = *it;
                if (dx + 1 > ecc) {
                    ecc = dx + 1;
                    farthest = *it;
                }
            }
        }
    }
    return {ecc, farthest};
}

} // namespace detail

/// Exact diameter and radius via one BFS per source. With
/// use_colour_symmetry (Uniform palettes only), sources are restricted to
/// canonical representatives under colour permutation; eccentricities are
/// permutation-invariant, so the restricted extrema equal the true ones.
/// The per-source loop is partitioned across workers; the result is
/// deterministic for any worker count.
inline MetricsReport metrics(const Graph& g, const Palette& p, bool use_colour_symmetry = false,
                             const ExplorerOptions& options = {}) {
    if (use_colour_symmetry && !p.is_uniform())
        throw std::invalid_argument("metrics: colour symmetry requires a uniform palette");
    MetricsReport report;
    auto space = StateSpace::build(g, p, options.state_budget);
    if (!space) {
        report.status = SearchStatus::budget_exhausted;
        return report;
    }
    const std::size_t n = space->node_count();
    report.node_count = n;
    if (n == 0) {
        report.component_count = 0;
        report.diameter = 0;
        report.radius = 0;
        return report;
    }
    auto [label, count] = detail::component_labels(*space);
    report.component_count = count;
    report.connected = count <= 1;
    if (!report.connected)
        return report; // diameter and radius are infinite

    std::vector<std::uint32_t> sources;
    if (use_colour_symmetry) {
        Colouring c;
        for (std::size_t i = 0; i < n; ++i) {
            c = space->colouring_at(i);
            if (detail::canonical_form(c) == c)
                sources.push_back(static_cast<std::uint32_t>(i));
        }
    } else {
        sources.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            sources[i] = static_cast<std::uint32_t>(i);
    }

    std::vector<std::uint32_t> ecc(sources.size(), 0);
    const int workers = std::max(1, std::min<int>(options.effective_workers(), static_cast<int>(sources.size())));
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        detail::BfsScratch scratch;
        for (std::size_t i = lo; i < hi; ++i)
            ecc[i] = detail::bfs_eccentricity(*space, sources[i], scratch).first;
    };
    if (workers <= 1) {
        run_range(0, sources.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (sources.size() + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = static_cast<std::size_t>(w) * chunk;
            const std::size_t hi = std::min(sources.size(), lo + chunk);
            if (lo < hi)
                pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool)
            t.join();
    }

    // Sequential reduction in source order keeps ties deterministic.
    std::size_t best = 0;
    std::uint64_t diam = 0, rad = UINT64_MAX;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (ecc[i] > diam) {
            diam = ecc[i];
            best = i;
        }
        rad = std::min<std::uint64_t>(rad, ecc[i]);
    }
    report.diameter = diam;
    report.radius = rad;
    detail::BfsScratch scratch;
    auto [e, far] = detail::bfs_eccentricity(*space, sources[best], scratch);
    report.witness_pair = std::make_pair(space->colouring_at(sources[best]), space->colouring_at(far));
    return report;
}

struct DistanceResult {
    enum class Status { reached, unreachable, budget_exhausted };
    Status status = Status::unreachable;
    std::uint64_t distance = 0;
    std::optional<RecolouringSequence> witness;
};

namespace detail {

// Generates neighbour codes of `code` in (vertex, colour) order.
template <class Fn>
void for_each_neighbour_code(const Graph& g, const Palette& p, const StateCodec& codec, StateCode code,
                             Colouring& scratch, Fn&& fn) {
    codec.decode(code, scratch);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        p.for_each_admissible(v, [&](Colour d) {
            if (d == scratch[static_cast<std::size_t>(v)])
                return;
            for (Vertex w : g.neighbours(v))
                if (scratch[static_cast<std::size_t>(w)] == d)
                    return;
            fn(codec.with_colour(code, v, d));
        });
    }
}

} // namespace detail

/// Exact shortest-path distance between two colourings via bidirectional
/// BFS over the implicit reconfiguration graph, with one shortest witness
/// sequence when reachable. Only depth maps are kept; the witness is
/// rebuilt by walking depths downhill.
inline DistanceResult distance(const Graph& g, const Palette& p, const Colouring& a, const Colouring& b,
                               const ExplorerOptions& options = {}) {
    using detail::StateCode;
    detail::check_palette_size(g, p);
    detail::check_state(g, p, a, "distance");
    detail::check_state(g, p, b, "distance");

    DistanceResult result;
    if (a == b) {
        result.status = DistanceResult::Status::reached;
        result.distance = 0;
        result.witness = RecolouringSequence{a, {}};
        return result;
    }
    if (!detail::StateCodec::fits(g.vertex_count(), p.max_colour())) {
        result.status = DistanceResult::Status::budget_exhausted;
        return result;
    }

    detail::StateCodec codec(g.vertex_count(), p.max_colour());
    const StateCode ca = codec.encode(a), cb = codec.encode(b);
    using DepthMap = std::unordered_map<StateCode, std::uint32_t, detail::StateCodeHash>;
    DepthMap side[2];
    std::vector<StateCode> frontier[2];
    std::uint32_t depth[2] = {0, 0};
    side[0].emplace(ca, 0);
    side[1].emplace(cb, 0);
    frontier[0].push_back(ca);
    frontier[1].push_back(cb);

    Colouring scratch;
    std::optional<StateCode> meet;
    std::uint64_t best = 0;
    int meet_side = 0;

    while (!meet) {
        const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const int o = 1 - s;
        if (frontier[s].empty()) {
            result.status = DistanceResult::Status::unreachable;
            return result;
        }
        std::vector<StateCode> next;
        std::uint64_t best_here = UINT64_MAX;
        for (StateCode code : frontier[s]) {
            detail::for_each_neighbour_code(g, p, codec, code, scratch, [&](StateCode nb) {
                if (auto it = side[o].find(nb); it != side[o].end()) {
                    const std::uint64_t cand = static_cast<std::uint64_t>(depth[s]) + 1 + it->second;
                    if (cand < best_here) {
                        best_here = cand;
                        meet = nb;
                        meet_side = s;
                    }
                    return;
                }
                if (side[s].emplace(nb, depth[s] + 1).second)
                    next.push_back(nb);
            });
        }
        if (side[0].size() + side[1].size() > options.state_budget) {
            result.status = DistanceResult::Status::budget_exhausted;
            return result;
        }
        if (meet) {
            best = best_here;
            break;
        }
        frontier[s] = std::move(next);
        ++depth[s];
    }

    result.status = DistanceResult::Status::reached;
    result.distance = best;

    // Walk from the meeting node to each endpoint along decreasing depth.
    auto walk_down = [&](const DepthMap& map, StateCode from) {
        std::vector<StateCode> chain{from};
        std::uint32_t d = map.at(from);
        StateCode cur = from;
        while (d > 0) {
            StateCode found = 0;
            bool have = false;
            detail::for_each_neighbour_code(g, p, codec, cur, scratch, [&](StateCode nb) {
                if (have)
                    return;
                auto it = map.find(nb);
                if (it != map.end() && it->second == d - 1) {
                    found = nb;
                    have = true;
                }
            });
            cur = found;
            --d;
            chain.push_back(cur);
        }
        return chain; // from -> ... -> depth-0 endpoint
    };

    // meet_side is the side whose expansion discovered the meeting node;
    // the node itself carries the other side's depth.
    const int o = 1 - meet_side;
    std::uint32_t depth_in_own = static_cast<std::uint32_t>(best) - side[o].at(*meet);
    // Find a neighbour of *meet in the expanding side at depth_in_own - 1,
    // then walk both sides down.
    std::vector<StateCode> own_chain;
    if (depth_in_own == 0) {
        own_chain = {*meet};
    } else {
        StateCode link = 0;
        bool have = false;
        detail::for_each_neighbour_code(g, p, codec, *meet, scratch, [&](StateCode nb) {
            if (have)
                return;
            auto it = side[meet_side].find(nb);
            if (it != side[meet_side].end() && it->second == depth_in_own - 1) {
                link = nb;
                have = true;
            }
        });
        own_chain = walk_down(side[meet_side], link);
        own_chain.insert(own_chain.begin(), *meet);
    }
    std::vector<StateCode> other_chain = walk_down(side[o], *meet);

    // Assemble the full node path from a to b.
    std::vector<StateCode> path;
    const auto& a_chain = (meet_side == 0) ? own_chain : other_chain;
    const auto& b_chain = (meet_side == 0) ? other_chain : own_chain;
    path.assign(a_chain.rbegin(), a_chain.rend()); // a ... meet
    for (std::size_t i = 1; i < b_chain.size(); ++i)
        path.push_back(b_chain[i]); // meet ... b

    RecolouringSequence seq;
    seq.start = a;
    Colouring prev = a, cur;
    for (std::size_t i = 1; i < path.size(); ++i) {
        codec.decode(path[i], cur);
        for (std::size_t v = 0; v < cur.size(); ++v)
            if (cur[v] != prev[v]) {
                seq.steps.push_back(Step{static_cast<Vertex>(v), cur[v]});
                break;
            }
        prev = cur;
    }
    result.witness = std::move(seq);
    return result;
}

struct HamiltonianResult {
    enum class Status { found, none, budget_exhausted };
    Status status = Status::none;
    std::vector<Colouring> cycle; // each node once, in cycle order
};

namespace detail {

// Hamiltonian-cycle search by edge branching with degree-1/degree-2
// forced-edge propagation: a vertex with only two usable edges forces
// both, a vertex with two forced edges excludes the rest, and forced
// segments may never close a cycle shorter than n. Branching picks the
// most constrained vertex and tries forcing its smallest open edge
// before excluding it.
class HamiltonianSolver {
public:
    enum class Outcome { found, none, budget_exhausted };

    HamiltonianSolver(std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list, std::size_t n)
        : n_(n), edges_(std::move(edge_list)) {
        incident_.resize(n_);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            incident_[edges_[e].first].push_back(static_cast<std::uint32_t>(e));
            incident_[edges_[e].second].push_back(static_cast<std::uint32_t>(e));
        }
        state_.assign(edges_.size(), open_state);
        open_cnt_.assign(n_, 0);
        forced_cnt_.assign(n_, 0);
        chain_end_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            open_cnt_[v] = static_cast<std::uint32_t>(incident_[v].size());
            chain_end_[v] = static_cast<std::uint32_t>(v);
        }
    }

    Outcome solve(std::uint64_t budget, std::vector<std::uint32_t>& cycle_out) {
        if (n_ < 3)
            return Outcome::none;
        for (std::size_t v = 0; v < n_; ++v)
            if (incident_[v].size() < 2)
                return Outcome::none;
        budget_ = budget;
        exhausted_ = false;
        // Seed: degree-2 vertices force both their edges.
        const std::size_t mark = trail_.size();
        bool ok = true;
        for (std::size_t v = 0; v < n_ && ok; ++v)
            ok = ensure_vertex(static_cast<std::uint32_t>(v));
        ok = ok && flush();
        if (ok && branch()) {
            extract_cycle(cycle_out);
            return Outcome::found;
        }
        undo_to(mark);
        return exhausted_ ? Outcome::budget_exhausted : Outcome::none;
    }

private:
    static constexpr std::uint8_t open_state = 0;
    static constexpr std::uint8_t forced_state = 1;
    static constexpr std::uint8_t excluded_state = 2;

    struct TrailEntry {
        std::uint32_t index;
        std::uint32_t old_value;
        bool is_edge; // edge state vs chain end
    };

    bool branch() {
        if (budget_ == 0) {
            exhausted_ = true;
            return false;
        }
        --budget_;
        if (total_forced_ == n_)
            return true;

        // Most constrained vertex still missing forced edges.
        std::uint32_t best = UINT32_MAX, best_open = UINT32_MAX;
        for (std::size_t v = 0; v < n_; ++v)
            if (forced_cnt_[v] < 2 && open_cnt_[v] < best_open) {
                best_open = open_cnt_[v];
                best = static_cast<std::uint32_t>(v);
            }
        if (best == UINT32_MAX)
            return false; // every vertex saturated yet cycle incomplete
        std::uint32_t edge = UINT32_MAX;
        for (std::uint32_t e : incident_[best])
            if (state_[e] == open_state) {
                edge = e;
                break;
            }
        if (edge == UINT32_MAX)
            return false;

        for (bool force_it : {true, false}) {
            const std::size_t mark = trail_.size();
            bool ok = force_it ? set_forced(edge) : set_excluded(edge);
            ok = ok && flush();
            if (ok && branch())
                return true;
            undo_to(mark);
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool ensure_vertex(std::uint32_t v) {
        const std::uint32_t usable = open_cnt_[v] + forced_cnt_[v];
        if (usable < 2)
            return false;
        if (usable == 2 && open_cnt_[v] > 0) {
            for (std::uint32_t e : incident_[v])
                if (state_[e] == open_state)
                    force_queue_.push_back(e);
        }
        return true;
    }

    bool set_forced(std::uint32_t e) {
        if (state_[e] == forced_state)
            return true;
        if (state_[e] == excluded_state)
            return false;
        const auto [u, v] = edges_[e];
        if (forced_cnt_[u] >= 2 || forced_cnt_[v] >= 2)
            return false;
        const std::uint32_t eu = chain_end_[u], ev = chain_end_[v];
        if (eu == v) {
            // Closing the chain into a cycle: legal only when it spans
            // every vertex.
            if (total_forced_ + 1 != n_)
                return false;
        }
        set_state(e, forced_state);
        ++total_forced_;
        for (std::uint32_t x : {u, v}) {
            --open_cnt_[x];
            ++forced_cnt_[x];
        }
        if (eu != v) {
            set_end(eu, ev);
            set_end(ev, eu);
            // The edge joining the merged chain's endpoints would close a
            // short cycle; exclude it now.
            if (total_forced_ < n_ - 1)
                if (std::uint32_t joining = find_edge(eu, ev); joining != UINT32_MAX)
                    if (state_[joining] == open_state)
                        exclude_queue_.push_back(joining);
        }
        for (std::uint32_t x : {u, v})
            if (forced_cnt_[x] == 2)
                for (std::uint32_t other : incident_[x])
                    if (state_[other] == open_state)
                        exclude_queue_.push_back(other);
        return true;
    }

    bool set_excluded(std::uint32_t e) {
        if (state_[e] == excluded_state)
            return true;
        if (state_[e] == forced_state)
            return false;
        set_state(e, excluded_state);
        const auto [u, v] = edges_[e];
        --open_cnt_[u];
        --open_cnt_[v];
        return ensure_vertex(u) && ensure_vertex(v);
    }

    bool flush() {
        while (!force_queue_.empty() || !exclude_queue_.empty()) {
            if (!exclude_queue_.empty()) {
                const std::uint32_t e = exclude_queue_.back();
                exclude_queue_.pop_back();
                if (!set_excluded(e)) {
                    force_queue_.clear();
                    exclude_queue_.clear();
                    return false;
                }
            } else {
                const std::uint32_t e = force_queue_.back();
                force_queue_.pop_back();
                if (!set_forced(e)) {
                    force_queue_.clear();
                    exclude_queue_.clear();
                    return false;
                }
            }
        }
        return true;
    }

    std::uint32_t find_edge(std::uint32_t a, std::uint32_t b) const {
        for (std::uint32_t e : incident_[a]) {
            const auto [x, y] = edges_[e];
            if (x == b || y == b)
                return e;
        }
        return UINT32_MAX;
    }

    void set_state(std::uint32_t e, std::uint8_t value) {
        trail_.push_back(TrailEntry{e, state_[e], true});
        state_[e] = value;
    }

    void set_end(std::uint32_t v, std::uint32_t end) {
        trail_.push_back(TrailEntry{v, chain_end_[v], false});
        chain_end_[v] = end;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry entry = trail_.back();
            trail_.pop_back();
            if (!entry.is_edge) {
                chain_end_[entry.index] = entry.old_value;
                continue;
            }
            const std::uint8_t cur = state_[entry.index];
            const auto [u, v] = edges_[entry.index];
            if (cur == forced_state) {
                --total_forced_;
                for (std::uint32_t x : {u, v}) {
                    ++open_cnt_[x];
                    --forced_cnt_[x];
                }
            } else if (cur == excluded_state) {
                ++open_cnt_[u];
                ++open_cnt_[v];
            }
            state_[entry.index] = static_cast<std::uint8_t>(entry.old_value);
        }
        force_queue_.clear();
        exclude_queue_.clear();
    }

    void extract_cycle(std::vector<std::uint32_t>& out) const {
        out.clear();
        out.reserve(n_);
        std::uint32_t prev = UINT32_MAX, at = 0;
        do {
            out.push_back(at);
            for (std::uint32_t e : incident_[at])
                if (state_[e] == forced_state) {
                    const auto [x, y] = edges_[e];
                    const std::uint32_t next = (x == at) ? y : x;
                    if (next != prev) {
                        prev = at;
                        at = next;
                        break;
                    }
                }
        } while (at != 0 && out.size() <= n_);
        // A full cycle returns to 0 after exactly n vertices.
    }

    std::size_t n_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::vector<std::uint32_t>> incident_;
    std::vector<std::uint8_t> state_;
    std::vector<std::uint32_t> open_cnt_, forced_cnt_, chain_end_;
    std::vector<TrailEntry> trail_;
    std::vector<std::uint32_t> force_queue_, exclude_queue_;
    std::size_t total_forced_ = 0;
    std::uint64_t budget_ = 0;
    bool exhausted_ = false;
};

} // namespace detail

/// Hamiltonian-cycle search over the explicit reconfiguration graph via
/// edge branching with degree-1/degree-2 forced-edge pruning. The budget
/// counts branch nodes.
inline HamiltonianResult hamiltonian_cycle(const Graph& g, const Palette& p, const ExplorerOptions& options = {}) {
    HamiltonianResult result;
    auto space = StateSpace::build(g, p, options.state_budget);
    if (!space) {
        result.status = HamiltonianResult::Status::budget_exhausted;
        return result;
    }
    const std::size_t n = space->node_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list;
    for (std::size_t i = 0; i < n; ++i)
        for (const std::uint32_t* it = space->adjacency_begin(i); it != space->adjacency_end(i); ++it)
            if (i < *it)
                edge_list.emplace_back(static_cast<std::uint32_t>(i), *it);
    detail::HamiltonianSolver solver(std::move(edge_list), n);
    std::vector<std::uint32_t> cycle;
    switch (solver.solve(options.search_budget, cycle)) {
    case detail::HamiltonianSolver::Outcome::found:
        result.status = HamiltonianResult::Status::found;
        result.cycle.reserve(n);
        for (std::uint32_t idx : cycle)
            result.cycle.push_back(space->colouring_at(idx));
        break;
    case detail::HamiltonianSolver::Outcome::budget_exhausted:
        result.status = HamiltonianResult::Status::budget_exhausted;
        break;
    default:
        result.status = HamiltonianResult::Status::none;
        break;
    }
    return result;
}

} // namespace recolour
