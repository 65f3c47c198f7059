#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "recolour/colouring.hpp"
#include "recolour/explorer.hpp"
#include "recolour/graph.hpp"

namespace recolour {

/// Exact rational used by the formula layer; flooring happens only at the
/// final published bound.
struct Rational {
    long long num = 0;
    long long den = 1; // > 0

    static Rational of(long long n, long long d = 1) {
        if (d == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        return Rational{g ? n / g : n, g ? d / g : 1};
    }

    Rational operator+(const Rational& o) const { return of(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return of(num * o.den - o.num * den, den * o.den); }
    auto operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
    bool operator==(const Rational& o) const = default;

    long long floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline long long floor_div(long long a, long long b) {
    // b > 0
    long long q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

enum class Regime { high, middle, low };

inline const char* regime_name(Regime r) {
    switch (r) {
    case Regime::high: return "high";
    case Regime::middle: return "middle";
    default: return "low";
    }
}

/// A complete-bipartite recolouring instance; parts are swapped on
/// construction so that p <= q always holds.
struct KpqInstance {
    int p;
    int q;
    int k;

    KpqInstance(int p_, int q_, int k_) : p(std::min(p_, q_)), q(std::max(p_, q_)), k(k_) {
        if (p < 1)
            throw std::invalid_argument("KpqInstance: part sizes must be positive");
        if (k < 3)
            throw std::invalid_argument("KpqInstance: need k >= 3");
    }

    int n() const { return p + q; }
    int half_up() const { return (k + 1) / 2; }   // ceil(k/2)
    int half_down() const { return k / 2; }       // floor(k/2)
    int quarter_sq() const { return (k / 2) * ((k + 1) / 2); } // floor(k^2/4)
};

/// Regime of the instance; the boundaries q = kp and q = ceil(k/2)p are
/// reported as middle and low respectively (the bound expressions agree
/// there).
inline Regime regime_of(const KpqInstance& inst) {
    const long long q = inst.q, p = inst.p;
    if (q <= static_cast<long long>(inst.half_up()) * p)
        return Regime::low;
    if (q <= static_cast<long long>(inst.k) * p)
        return Regime::middle;
    return Regime::high;
}

/// The three-regime upper bound on diam C_k(K_{p,q}), floored.
inline long long upper_bound_formula(const KpqInstance& inst) {
    const long long p = inst.p, q = inst.q, k = inst.k;
    switch (regime_of(inst)) {
    case Regime::high:
        return 2 * p + q + floor_div(q - p, k - 1);
    case Regime::middle:
        return 3 * p + q + floor_div(q - k * p, inst.quarter_sq());
    default:
        return 2 * p + q + floor_div(q - p, inst.half_up());
    }
}

struct DiameterInterval {
    long long lower = 0;
    long long upper = 0;
    Regime regime = Regime::high;
    long long g_slack = 0; // upper - lower
    bool exact = false;
};

/// [lower, upper] interval certified by the three-regime theorem: the
/// upper bound minus the proven cap on the error term. Exact when k = 3,
/// in the high regime, or when p and q are both multiples of
/// floor(k^2/4) in the other regimes.
inline DiameterInterval diameter_interval(const KpqInstance& inst) {
    DiameterInterval res;
    res.regime = regime_of(inst);
    res.upper = upper_bound_formula(inst);
    long long slack = 0;
    if (res.regime == Regime::middle)
        slack = inst.quarter_sq();
    else if (res.regime == Regime::low)
        slack = inst.half_down();
    const int f = inst.quarter_sq();
    res.exact = inst.k == 3 || res.regime == Regime::high || (inst.p % f == 0 && inst.q % f == 0);
    if (res.exact)
        slack = 0;
    res.lower = res.upper - slack;
    res.g_slack = slack;
    return res;
}

struct ExtremalPairSpec {
    struct Block {
        int i = 0; // alpha colour on the U block, beta colour on the V block
        int j = 0; // beta colour on the U block, alpha colour on the V block
        int u_size = 0;
        int v_size = 0;
    };
    int a = 0;
    int b = 0;
    std::vector<Block> blocks; // j-major order; larger blocks come first
};

struct ExtremalPair {
    Colouring alpha;
    Colouring beta;
    ExtremalPairSpec spec;
};

/// The block-structured far-apart pair: alpha uses colours [a] on U and
/// [a+1, k] on V, beta swaps the parts. (a, b) = (1, k-1) when q >= kp,
/// else (floor(k/2), ceil(k/2)); block sizes are the rounded p/(ab) and
/// q/(ab) with the larger blocks at smaller indices.
inline ExtremalPair extremal_pair(const KpqInstance& inst) {
    ExtremalPair out;
    auto& spec = out.spec;
    if (static_cast<long long>(inst.q) >= static_cast<long long>(inst.k) * inst.p) {
        spec.a = 1;
        spec.b = inst.k - 1;
    } else {
        spec.a = inst.half_down();
        spec.b = inst.half_up();
    }
    const int ab = spec.a * spec.b;
    const int u_big = inst.p % ab, v_big = inst.q % ab;
    int index = 0;
    for (int j = spec.a + 1; j <= inst.k; ++j)
        for (int i = 1; i <= spec.a; ++i) {
            ExtremalPairSpec::Block bl;
            bl.i = i;
            bl.j = j;
            bl.u_size = inst.p / ab + (index < u_big ? 1 : 0);
            bl.v_size = inst.q / ab + (index < v_big ? 1 : 0);
            spec.blocks.push_back(bl);
            ++index;
        }
    out.alpha.resize(static_cast<std::size_t>(inst.n()));
    out.beta.resize(static_cast<std::size_t>(inst.n()));
    int u = 0, v = inst.p;
    for (const auto& bl : spec.blocks) {
        for (int t = 0; t < bl.u_size; ++t, ++u) {
            out.alpha[static_cast<std::size_t>(u)] = bl.i;
            out.beta[static_cast<std::size_t>(u)] = bl.j;
        }
        for (int t = 0; t < bl.v_size; ++t, ++v) {
            out.alpha[static_cast<std::size_t>(v)] = bl.j;
            out.beta[static_cast<std::size_t>(v)] = bl.i;
        }
    }
    return out;
}

/// y-statistics of a colour c shared by both endpoint colourings on V.
struct InductionStats {
    long long y0 = 0; // |a^-1(c) ∩ b^-1(c)|
    long long y1 = 0; // |a^-1(c) \ b^-1(c)|
    long long y2 = 0; // |b^-1(c) \ a^-1(c)|
    long long y = 0;  // y0 + y1 + y2
};

inline InductionStats induction_stats(const Colouring& a, const Colouring& b, const std::vector<Vertex>& part,
                                      Colour c) {
    InductionStats s;
    for (Vertex v : part) {
        const bool in_a = a.at(static_cast<std::size_t>(v)) == c;
        const bool in_b = b.at(static_cast<std::size_t>(v)) == c;
        s.y0 += in_a && in_b;
        s.y1 += in_a && !in_b;
        s.y2 += !in_a && in_b;
    }
    s.y = s.y0 + s.y1 + s.y2;
    return s;
}

namespace detail {

using ColourMask = std::uint64_t;
using VertexList = std::vector<Vertex>;

inline ColourMask full_mask(int k) { return (ColourMask{1} << (k + 1)) - 2; } // bits 1..k

inline ColourMask used_on(const Colouring& c, const VertexList& part) {
    ColourMask m = 0;
    for (Vertex v : part)
        m |= ColourMask{1} << c[static_cast<std::size_t>(v)];
    return m;
}

inline int smallest_colour(ColourMask m) { return std::countr_zero(m); }

template <class Fn>
void for_each_colour(ColourMask m, Fn&& fn) {
    while (m) {
        fn(static_cast<Colour>(std::countr_zero(m)));
        m &= m - 1;
    }
}

inline void emit(Colouring& cur, std::vector<Step>& steps, Vertex v, Colour c) {
    auto& slot = cur[static_cast<std::size_t>(v)];
    if (slot == c)
        return;
    slot = c;
    steps.push_back(Step{v, c});
}

/// Reverses a walk: given the colouring the forward steps started from,
/// produces the step list of the same walk traversed backwards.
inline std::vector<Step> reverse_steps(const Colouring& forward_start, const std::vector<Step>& steps) {
    Colouring c = forward_start;
    std::vector<Colour> prev(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        prev[i] = c[static_cast<std::size_t>(steps[i].vertex)];
        c[static_cast<std::size_t>(steps[i].vertex)] = steps[i].colour;
    }
    std::vector<Step> rev;
    rev.reserve(steps.size());
    for (std::size_t i = steps.size(); i-- > 0;)
        rev.push_back(Step{steps[i].vertex, prev[i]});
    return rev;
}

// Three-phase spare-colour walk: park the U vertices that still have to
// move on c, finish V, finish U. Vertices already at their final colour
// are never detoured.
inline std::vector<Step> spare_emit(const VertexList& us, const VertexList& vs, Colouring cur,
                                    const Colouring& target, Colour c) {
    std::vector<Step> steps;
    for (Vertex u : us)
        if (cur[static_cast<std::size_t>(u)] != target[static_cast<std::size_t>(u)])
            emit(cur, steps, u, c);
    for (Vertex v : vs)
        emit(cur, steps, v, target[static_cast<std::size_t>(v)]);
    for (Vertex u : us)
        emit(cur, steps, u, target[static_cast<std::size_t>(u)]);
    return steps;
}

// Five-phase split-swap walk for C1 = empty, |C3| >= 2, given designated
// subsets C2' of C2 and C3' strictly inside C3.
inline std::vector<Step> split_swap_emit(const VertexList& us, const VertexList& vs, Colouring cur,
                                         const Colouring& target, ColourMask c2, ColourMask c3, ColourMask c2p,
                                         ColourMask c3p) {
    std::vector<Step> steps;
    const ColourMask c3_rest = c3 & ~c3p;
    const ColourMask park2 = c3p | (c2 & ~c2p);
    for (Vertex u : us)
        if ((ColourMask{1} << cur[static_cast<std::size_t>(u)]) & c3p)
            emit(cur, steps, u, smallest_colour(c3_rest));
    for (Vertex v : vs) {
        if (((ColourMask{1} << cur[static_cast<std::size_t>(v)]) & c2p) == 0)
            continue;
        const Colour t = target[static_cast<std::size_t>(v)];
        emit(cur, steps, v, ((ColourMask{1} << t) & c3p) ? t : smallest_colour(park2));
    }
    for (Vertex u : us) {
        const Colour t = target[static_cast<std::size_t>(u)];
        emit(cur, steps, u, ((ColourMask{1} << t) & c2p) ? t : smallest_colour(c2p));
    }
    for (Vertex v : vs)
        emit(cur, steps, v, target[static_cast<std::size_t>(v)]);
    for (Vertex u : us)
        emit(cur, steps, u, target[static_cast<std::size_t>(u)]);
    return steps;
}

struct Candidate {
    std::vector<Step> steps;
    int strategy = 0;
    int colour = 0;
    bool valid = false;

    bool better_than(const Candidate& o) const {
        if (!o.valid)
            return valid;
        if (!valid)
            return false;
        auto key = [](const Candidate& c) { return std::make_tuple(c.steps.size(), c.strategy, c.colour); };
        if (key(*this) != key(o))
            return key(*this) < key(o);
        return std::lexicographical_compare(
            steps.begin(), steps.end(), o.steps.begin(), o.steps.end(),
            [](const Step& x, const Step& y) { return std::make_pair(x.vertex, x.colour) < std::make_pair(y.vertex, y.colour); });
    }
};

inline void consider(Candidate& best, Candidate cand) {
    cand.valid = true;
    if (cand.better_than(best))
        best = std::move(cand);
}

// Enumerates size-r subsets of the set bits of `universe` in
// lexicographic order.
template <class Fn>
void for_each_subset(ColourMask universe, int r, Fn&& fn) {
    std::vector<Colour> pool;
    for_each_colour(universe, [&](Colour c) { pool.push_back(c); });
    const int n = static_cast<int>(pool.size());
    if (r < 0 || r > n)
        return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        ColourMask m = 0;
        for (int i : idx)
            m |= ColourMask{1} << pool[static_cast<std::size_t>(i)];
        fn(m);
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - r + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < r; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

inline ColourMask random_subset(ColourMask universe, int r, std::mt19937& rng) {
    std::vector<Colour> pool;
    for_each_colour(universe, [&](Colour c) { pool.push_back(c); });
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
    ColourMask m = 0;
    for (int i = 0; i < r; ++i)
        m |= ColourMask{1} << pool[static_cast<std::size_t>(i)];
    return m;
}

// Searches the designated subset-size choices (|C2|, |C3|-1) and
// (1, |C3|-1) behind the two averaged bounds, exhaustively when
// |C2||C3| <= 12, otherwise over a deterministic seeded sample plus a
// greedy pick.
inline Candidate split_swap_search(const VertexList& us, const VertexList& vs, const Colouring& cur,
                                   const Colouring& target, ColourMask c2, ColourMask c3) {
    Candidate best;
    const int n2 = std::popcount(c2), n3 = std::popcount(c3);
    const std::pair<int, int> size_choices[2] = {{n2, n3 - 1}, {1, n3 - 1}};
    auto try_pair = [&](ColourMask c2p, ColourMask c3p) {
        Candidate cand;
        cand.steps = split_swap_emit(us, vs, cur, target, c2, c3, c2p, c3p);
        cand.strategy = 0;
        cand.colour = smallest_colour(c3p);
        consider(best, std::move(cand));
    };
    if (n2 * n3 <= 12) {
        for (auto [s2, s3] : size_choices)
            for_each_subset(c2, s2, [&](ColourMask c2p) {
                for_each_subset(c3, s3, [&](ColourMask c3p) { try_pair(c2p, c3p); });
            });
        return best;
    }
    // Greedy pick: cheapest phase-1 colours stay outside C3', heaviest
    // target colours go inside C2'.
    std::vector<std::pair<long long, Colour>> cost3, gain2;
    for_each_colour(c3, [&](Colour c) {
        long long parked = 0;
        for (Vertex u : us)
            parked += cur[static_cast<std::size_t>(u)] == c;
        cost3.emplace_back(parked, c);
    });
    for_each_colour(c2, [&](Colour c) {
        long long hits = 0;
        for (Vertex u : us)
            hits += target[static_cast<std::size_t>(u)] == c;
        gain2.emplace_back(-hits, c);
    });
    std::sort(cost3.begin(), cost3.end());
    std::sort(gain2.begin(), gain2.end());
    for (auto [s2, s3] : size_choices) {
        ColourMask c2p = 0, c3p = 0;
        for (int i = 0; i < s2; ++i)
            c2p |= ColourMask{1} << gain2[static_cast<std::size_t>(i)].second;
        for (int i = 0; i < s3; ++i)
            c3p |= ColourMask{1} << cost3[static_cast<std::size_t>(i)].second;
        try_pair(c2p, c3p);
    }
    std::mt19937 rng(0x5eed5u);
    for (int round = 0; round < 1000; ++round) {
        const auto [s2, s3] = size_choices[round % 2];
        try_pair(random_subset(c2, s2, rng), random_subset(c3, s3, rng));
    }
    return best;
}

inline std::vector<Step> recolour_core(const VertexList& a_part, const VertexList& b_part, ColourMask colours,
                                       const Colouring& cur_in, const Colouring& target);

// Base case on three active colours, all three sets singletons:
// the shorter of the two classic walks.
inline Candidate base_three(const VertexList& us, const VertexList& vs, const Colouring& cur,
                            const Colouring& target, Colour c1, Colour c2, Colour c3) {
    Candidate best;
    {
        Candidate cand;
        Colouring work = cur;
        for (Vertex v : vs)
            if (work[static_cast<std::size_t>(v)] == c2)
                emit(work, cand.steps, v, c1);
        for (Vertex u : us)
            emit(work, cand.steps, u, c2);
        for (Vertex v : vs)
            if (target[static_cast<std::size_t>(v)] == c3)
                emit(work, cand.steps, v, c3);
        cand.strategy = 1;
        consider(best, std::move(cand));
    }
    {
        Candidate cand;
        Colouring work = cur;
        for (Vertex v : vs)
            if (work[static_cast<std::size_t>(v)] == c1)
                emit(work, cand.steps, v, c2);
        for (Vertex u : us)
            emit(work, cand.steps, u, c1);
        for (Vertex v : vs)
            emit(work, cand.steps, v, c3);
        for (Vertex u : us)
            emit(work, cand.steps, u, target[static_cast<std::size_t>(u)]);
        for (Vertex v : vs)
            if (target[static_cast<std::size_t>(v)] == c1)
                emit(work, cand.steps, v, c1);
        cand.strategy = 2;
        consider(best, std::move(cand));
    }
    return best;
}

// Six-phase walk clearing a shared colour c by parking U on it.
inline Candidate claim_park(const VertexList& us, const VertexList& vs, const Colouring& cur,
                            const Colouring& target, ColourMask c2, ColourMask c3, Colour c) {
    Candidate cand;
    Colouring work = cur;
    for (Vertex v : vs)
        if (work[static_cast<std::size_t>(v)] == c) {
            const Colour t = target[static_cast<std::size_t>(v)];
            emit(work, cand.steps, v, ((ColourMask{1} << t) & c2) ? t : smallest_colour(c2));
        }
    for (Vertex u : us)
        emit(work, cand.steps, u, c);
    for (Vertex v : vs)
        if (target[static_cast<std::size_t>(v)] != c)
            emit(work, cand.steps, v, target[static_cast<std::size_t>(v)]);
    for (Vertex v : vs)
        if (target[static_cast<std::size_t>(v)] == c)
            emit(work, cand.steps, v, smallest_colour(c3));
    for (Vertex u : us)
        emit(work, cand.steps, u, target[static_cast<std::size_t>(u)]);
    for (Vertex v : vs)
        if (target[static_cast<std::size_t>(v)] == c)
            emit(work, cand.steps, v, c);
    cand.strategy = 2;
    cand.colour = c;
    return cand;
}

// Pin colour c on the vertices that keep it, recurse on the rest with
// one colour fewer, then finish the vertices that gave c up.
inline Candidate claim_recurse(const VertexList& us, const VertexList& vs, ColourMask colours, const Colouring& cur,
                               const Colouring& target, Colour c) {
    Candidate cand;
    Colouring work = cur;
    VertexList rest;
    std::vector<Vertex> gave_up;
    for (Vertex v : vs) {
        const bool in_cur = work[static_cast<std::size_t>(v)] == c;
        const bool in_target = target[static_cast<std::size_t>(v)] == c;
        if (in_target && !in_cur)
            emit(work, cand.steps, v, c);
        if (in_cur && !in_target)
            gave_up.push_back(v);
        if (!in_cur && !in_target)
            rest.push_back(v);
    }
    if (rest.empty()) {
        for (Vertex u : us)
            emit(work, cand.steps, u, target[static_cast<std::size_t>(u)]);
    } else {
        auto sub = recolour_core(us, rest, colours & ~(ColourMask{1} << c), work, target);
        for (const Step& s : sub) {
            work[static_cast<std::size_t>(s.vertex)] = s.colour;
            cand.steps.push_back(s);
        }
    }
    for (Vertex v : gave_up)
        emit(work, cand.steps, v, target[static_cast<std::size_t>(v)]);
    cand.strategy = 1;
    cand.colour = c;
    return cand;
}

// Strategy ladder over the active colour set; vertices keep their
// ambient indices throughout, so recursion needs no lifting maps.
inline std::vector<Step> recolour_core(const VertexList& a_part, const VertexList& b_part, ColourMask colours,
                                       const Colouring& cur_in, const Colouring& target) {
    bool all_equal = true;
    for (const VertexList* part : {&a_part, &b_part})
        for (Vertex v : *part)
            if (cur_in[static_cast<std::size_t>(v)] != target[static_cast<std::size_t>(v)]) {
                all_equal = false;
                break;
            }
    if (all_equal)
        return {};

    const VertexList& us = a_part.size() <= b_part.size() ? a_part : b_part;
    const VertexList& vs = a_part.size() <= b_part.size() ? b_part : a_part;

    const ColourMask cur_v = used_on(cur_in, vs);
    const ColourMask target_v = used_on(target, vs);
    const ColourMask c1 = cur_v & target_v;
    const ColourMask c2 = cur_v & ~c1;
    const ColourMask c3 = target_v & ~c1;

    if (std::popcount(c3) < std::popcount(c2)) {
        // Exchange the roles of the endpoints and reverse the walk.
        Colouring rev_start = cur_in;
        for (const VertexList* part : {&a_part, &b_part})
            for (Vertex v : *part)
                rev_start[static_cast<std::size_t>(v)] = target[static_cast<std::size_t>(v)];
        auto back = recolour_core(a_part, b_part, colours, rev_start, cur_in);
        return reverse_steps(rev_start, back);
    }

    const ColourMask spare = colours & ~(cur_v | target_v);
    if (spare) {
        Candidate best;
        for_each_colour(spare, [&](Colour c) {
            Candidate cand;
            cand.steps = spare_emit(us, vs, cur_in, target, c);
            cand.colour = c;
            consider(best, std::move(cand));
        });
        return std::move(best.steps);
    }

    if (c1 == 0)
        return std::move(split_swap_search(us, vs, cur_in, target, c2, c3).steps);

    if (std::popcount(colours) == 3)
        return std::move(
            base_three(us, vs, cur_in, target, smallest_colour(c1), smallest_colour(c2), smallest_colour(c3)).steps);

    Candidate best;
    for_each_colour(c1, [&](Colour c) {
        consider(best, claim_recurse(us, vs, colours, cur_in, target, c));
        consider(best, claim_park(us, vs, cur_in, target, c2, c3, c));
    });
    return std::move(best.steps);
}

inline void check_kpq_inputs(const KpqInstance& inst, const Colouring& a, const Colouring& b, const char* where) {
    if (inst.k > 62)
        throw std::invalid_argument(std::string(where) + ": colour count above 62 is not supported");
    if (static_cast<int>(a.size()) != inst.n() || static_cast<int>(b.size()) != inst.n())
        throw std::invalid_argument(std::string(where) + ": colouring length must be p+q");
    for (const Colouring* c : {&a, &b}) {
        for (int u = 0; u < inst.p; ++u)
            for (int v = 0; v < inst.q; ++v)
                if ((*c)[static_cast<std::size_t>(u)] == (*c)[static_cast<std::size_t>(inst.p + v)])
                    throw std::invalid_argument(std::string(where) + ": colouring is not proper on K_{p,q}");
        for (Colour col : *c)
            if (col < 1 || col > inst.k)
                throw std::invalid_argument(std::string(where) + ": colour outside [k]");
    }
}

inline std::pair<VertexList, VertexList> kpq_parts(const KpqInstance& inst) {
    VertexList us(static_cast<std::size_t>(inst.p)), vs(static_cast<std::size_t>(inst.q));
    std::iota(us.begin(), us.end(), 0);
    std::iota(vs.begin(), vs.end(), inst.p);
    return {std::move(us), std::move(vs)};
}

} // namespace detail

/// Three-phase sequence through a colour c used on V by neither endpoint
/// colouring: park U on c, finish V, finish U. Length at most 2p+q.
inline RecolouringSequence spare_colour_sequence(const KpqInstance& inst, const Colouring& a, const Colouring& b,
                                                 Colour c) {
    detail::check_kpq_inputs(inst, a, b, "spare_colour_sequence");
    if (c < 1 || c > inst.k)
        throw std::invalid_argument("spare_colour_sequence: colour outside [k]");
    auto [us, vs] = detail::kpq_parts(inst);
    const detail::ColourMask on_v = detail::used_on(a, vs) | detail::used_on(b, vs);
    if ((detail::ColourMask{1} << c) & on_v)
        throw std::invalid_argument("spare_colour_sequence: colour is used on V by an endpoint colouring");
    return RecolouringSequence{a, detail::spare_emit(us, vs, a, b, c)};
}

/// Five-phase sequence for endpoint pairs sharing no colour on V
/// (C1 empty), searched over the designated subset choices. The pair is
/// reversed first when |C3| < |C2|.
inline RecolouringSequence split_swap_sequence(const KpqInstance& inst, const Colouring& a, const Colouring& b) {
    detail::check_kpq_inputs(inst, a, b, "split_swap_sequence");
    auto [us, vs] = detail::kpq_parts(inst);
    detail::ColourMask cur_v = detail::used_on(a, vs);
    detail::ColourMask target_v = detail::used_on(b, vs);
    if (cur_v & target_v)
        throw std::invalid_argument("split_swap_sequence: C1 is not empty");
    if (std::popcount(target_v) < std::popcount(cur_v)) {
        auto back = split_swap_sequence(inst, b, a);
        return RecolouringSequence{a, detail::reverse_steps(b, back.steps)};
    }
    if (std::popcount(target_v) < 2) {
        // Both parts are monochrome on V; with k >= 3 a spare colour
        // always exists, and the three-phase walk meets the bound.
        const detail::ColourMask spare = detail::full_mask(inst.k) & ~(cur_v | target_v);
        return RecolouringSequence{a, detail::spare_emit(us, vs, a, b, detail::smallest_colour(spare))};
    }
    return RecolouringSequence{a, detail::split_swap_search(us, vs, a, b, cur_v, target_v).steps};
}

/// Certified construction: a valid recolouring sequence from a to b of
/// length at most upper_bound_formula(inst), chosen as the shortest
/// candidate of the strategy portfolio.
inline RecolouringSequence recolour_kpq(const KpqInstance& inst, const Colouring& a, const Colouring& b) {
    detail::check_kpq_inputs(inst, a, b, "recolour_kpq");
    auto [us, vs] = detail::kpq_parts(inst);
    RecolouringSequence seq{a, detail::recolour_core(us, vs, detail::full_mask(inst.k), a, b)};
    if (seq.final_colouring() != b)
        throw std::logic_error("recolour_kpq: constructed sequence does not reach the target");
    return seq;
}

struct RegimeRow {
    int q = 0;
    Rational bound_high;   // 2p + q + (q-p)/(k-1)
    Rational bound_middle; // 3p + q + (q-kp)/floor(k^2/4)
    Rational bound_low;    // 2p + q + (q-p)/ceil(k/2)
    Rational active;       // max{high, min{middle, low}}
};

/// Plot data for the three unfloored regime expressions, q = p..q_max.
inline std::vector<RegimeRow> regime_table(int k, int p, int q_max) {
    if (k < 3 || p < 1 || q_max < p)
        throw std::invalid_argument("regime_table: need k >= 3 and 1 <= p <= q_max");
    std::vector<RegimeRow> rows;
    const long long quarter = (k / 2) * ((k + 1) / 2);
    for (int q = p; q <= q_max; ++q) {
        RegimeRow row;
        row.q = q;
        row.bound_high = Rational::of(2 * p + q) + Rational::of(q - p, k - 1);
        row.bound_middle = Rational::of(3 * p + q) + Rational::of(q - static_cast<long long>(k) * p, quarter);
        row.bound_low = Rational::of(2 * p + q) + Rational::of(q - p, (k + 1) / 2);
        row.active = std::max(row.bound_high, std::min(row.bound_middle, row.bound_low));
        rows.push_back(row);
    }
    return rows;
}

} // namespace recolour
