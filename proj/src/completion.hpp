#pragma once

// Internal mark-propagation engine shared by the latent-free and embedded
// pattern completion paths. Not part of the public interface.

#include <set>
#include <tuple>
#include <vector>

#include "causal/graph.hpp"

namespace causal::detail {

// Uncoupled head-to-head triples of a hybrid graph: both links carry an
// arrowhead at the shared node and the outer nodes are not linked.
// Bidirected arrowheads count. Triples are (x, c, y) with x < y.
inline std::set<std::tuple<int, int, int>> hybrid_vees(const HybridGraph& g) {
    std::set<std::tuple<int, int, int>> out;
    const int n = g.node_count();
    for (int c = 0; c < n; ++c)
        for (int x = 0; x < n; ++x) {
            if (x == c || g.mark_at(x, c) != Mark::Arrow) continue;
            for (int y = x + 1; y < n; ++y) {
                if (y == c || g.mark_at(y, c) != Mark::Arrow) continue;
                if (!g.linked(x, y)) out.insert({x, c, y});
            }
        }
    return out;
}

// Cycle test over singly-directed links only; bidirected links never take
// part in a strictly directed cycle.
inline bool has_strictly_directed_cycle(const HybridGraph& g) {
    const int n = g.node_count();
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
    auto dfs = [&](auto&& self, int v) -> bool {
        state[static_cast<std::size_t>(v)] = 1;
        for (int w = 0; w < n; ++w) {
            if (w == v || !g.is_directed(v, w)) continue;
            if (state[static_cast<std::size_t>(w)] == 1) return true;
            if (state[static_cast<std::size_t>(w)] == 0 && self(self, w)) return true;
        }
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (state[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) return true;
    return false;
}

// Orientation closure. Adds arrowheads forced by the two completion
// constraints: no new uncoupled head-to-head node and no strictly directed
// cycle. Demands are collected per round against a fixed snapshot, so the
// fixpoint does not depend on iteration order.
//
//   rule 1: x*->b with b-c undirected and x,c not linked forces b->c
//   rule 2: x->y->z singly directed with x-z undirected forces x->z
//   rule 3: a-b, a-c, a-d undirected, c->b and d->b, c,d not linked forces a->b
//
// Throws InconsistentPatternError when opposite orientations get demanded or
// when the result violates either constraint.
inline HybridGraph complete_marks(HybridGraph g) {
    const int n = g.node_count();
    const auto input_vees = hybrid_vees(g);
    if (has_strictly_directed_cycle(g))
        throw InconsistentPatternError("pattern contains a directed cycle");

    while (true) {
        // demanded arrow at .second on the link .first~.second
        std::set<std::pair<int, int>> demands;

        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < n; ++x) {
                if (x == b || g.mark_at(x, b) != Mark::Arrow) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == b || c == x || !g.is_undirected(b, c)) continue;
                    if (!g.linked(x, c)) demands.insert({b, c});
                }
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (y == x || !g.is_directed(x, y)) continue;
                for (int z = 0; z < n; ++z) {
                    if (z == x || z == y || !g.is_directed(y, z)) continue;
                    if (g.is_undirected(x, z)) demands.insert({x, z});
                }
            }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (b == a || !g.is_undirected(a, b)) continue;
                bool forced = false;
                for (int c = 0; c < n && !forced; ++c) {
                    if (c == a || c == b || !g.is_undirected(a, c) || !g.is_directed(c, b))
                        continue;
                    for (int d = c + 1; d < n && !forced; ++d) {
                        if (d == a || d == b || !g.is_undirected(a, d) || !g.is_directed(d, b))
                            continue;
                        if (!g.linked(c, d)) forced = true;
                    }
                }
                if (forced) demands.insert({a, b});
            }

        if (demands.empty()) break;
        for (auto [i, j] : demands) {
            if (demands.count({j, i}))
                throw InconsistentPatternError("both orientations forced for link " + g.name(i) +
                                               " ~ " + g.name(j));
            g.add_arrow(i, j);
        }
    }

    if (hybrid_vees(g) != input_vees)
        throw InconsistentPatternError("completion would create a new uncoupled collider");
    if (has_strictly_directed_cycle(g))
        throw InconsistentPatternError("completion would create a directed cycle");
    return g;
}

}  // namespace causal::detail
