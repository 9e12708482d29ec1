#include "causal/recovery.hpp"

#include <algorithm>
#include <set>

#include "completion.hpp"

namespace causal {

namespace {

// First separator among all subsets of U - {a, b}, ascending size then
// lexicographic.
std::optional<NodeSet> search_full(const IndependenceOracle& o, int a, int b) {
    NodeSet pool = NodeSet::full(o.variable_count()).without(a).without(b);
    std::optional<NodeSet> found;
    for_each_subset_ordered(pool, [&](NodeSet s) {
        if (o.holds(a, s, b)) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

bool lex_less(NodeSet x, NodeSet y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.to_vector() < y.to_vector();
}

// Same search over an explicit, already ordered candidate list.
std::optional<NodeSet> search_restricted(const IndependenceOracle& o, int a, int b,
                                         const std::vector<NodeSet>& candidates) {
    for (NodeSet s : candidates)
        if (o.holds(a, s, b)) return s;
    return std::nullopt;
}

using SeparatorFn = std::optional<NodeSet> (*)(const IndependenceOracle&, int, int, const void*);

// Step 1 driver. Pair searches are independent; the parallel path fans them
// out over OpenMP and commits results into per-pair slots, so the outcome is
// identical to the serial reference.
template <typename SearchPair>
std::vector<std::optional<NodeSet>> find_separators(const std::vector<std::pair<int, int>>& pairs,
                                                    SearchPair&& search, Exec exec) {
    std::vector<std::optional<NodeSet>> out(pairs.size());
    const int total = static_cast<int>(pairs.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < total; ++k)
            out[static_cast<std::size_t>(k)] = search(pairs[static_cast<std::size_t>(k)]);
    } else {
        for (int k = 0; k < total; ++k)
            out[static_cast<std::size_t>(k)] = search(pairs[static_cast<std::size_t>(k)]);
    }
    return out;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

// Steps 1 and 2 shared by both entry points.
RecoveryResult run_recovery(const IndependenceOracle& o,
                            const std::vector<std::optional<NodeSet>>& separators,
                            const std::vector<std::pair<int, int>>& pairs) {
    const int n = o.variable_count();
    RecoveryResult result{HybridGraph(o.variables()), {}};
    HybridGraph& h = result.graph;

    for (std::size_t k = 0; k < pairs.size(); ++k) {
        result.separators.sep[pairs[k]] = separators[k];
        if (!separators[k]) h.set_link(pairs[k].first, pairs[k].second, Mark::Tail, Mark::Tail);
    }

    // Step 2: a common neighbor c of a separated pair is a collider when
    // conditioning on it restores dependence. Arrowheads accumulate and are
    // never retracted.
    for (auto [a, b] : pairs) {
        const auto& sab = result.separators.at(a, b);
        if (!sab) continue;
        for (int c = 0; c < n; ++c) {
            if (c == a || c == b || !h.linked(a, c) || !h.linked(b, c)) continue;
            if (!o.holds(a, sab->with(c), b)) {
                h.add_arrow(a, c);
                h.add_arrow(b, c);
            }
        }
    }
    return result;
}

}  // namespace

RecoveryResult recover(const IndependenceOracle& oracle, RecoveryOptions options) {
    const auto pairs = all_pairs(oracle.variable_count());
    const auto separators = find_separators(
        pairs, [&](std::pair<int, int> p) { return search_full(oracle, p.first, p.second); },
        options.exec);
    RecoveryResult result = run_recovery(oracle, separators, pairs);
    if (options.complete) result.graph = detail::complete_marks(result.graph);
    return result;
}

MarkovNet markov_net(const IndependenceOracle& oracle) {
    const int n = oracle.variable_count();
    MarkovNet net{oracle.variables(), std::vector<NodeSet>(static_cast<std::size_t>(n))};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            NodeSet rest = NodeSet::full(n).without(a).without(b);
            if (!oracle.holds(a, rest, b)) {
                net.adjacent[static_cast<std::size_t>(a)].insert(b);
                net.adjacent[static_cast<std::size_t>(b)].insert(a);
            }
        }
    return net;
}

std::vector<NodeSet> maximal_cliques(const MarkovNet& net) {
    std::vector<NodeSet> cliques;
    const int n = static_cast<int>(net.names.size());
    auto bk = [&](auto&& self, NodeSet r, NodeSet p, NodeSet x) -> void {
        if (p.empty() && x.empty()) {
            cliques.push_back(r);
            return;
        }
        for (int v : p) {
            const NodeSet nv = net.adjacent[static_cast<std::size_t>(v)];
            self(self, r.with(v), p & nv, x & nv);
            p.erase(v);
            x.insert(v);
        }
    };
    bk(bk, NodeSet(), NodeSet::full(n), NodeSet());
    std::sort(cliques.begin(), cliques.end(), lex_less);
    return cliques;
}

LatentFreeResult recover_latent_free(const IndependenceOracle& oracle, RecoveryOptions options) {
    const MarkovNet net = markov_net(oracle);
    const std::vector<NodeSet> cliques = maximal_cliques(net);
    const auto pairs = all_pairs(oracle.variable_count());

    // Candidate separators for (a, b): subsets of any maximal clique that
    // contains a or b, minus the endpoints. The parent set of the endpoint
    // that is no descendant of the other always lies inside such a clique.
    auto candidates_for = [&](int a, int b) {
        std::set<std::uint64_t> seen;
        std::vector<NodeSet> out;
        for (NodeSet c : cliques) {
            if (!c.contains(a) && !c.contains(b)) continue;
            for_each_subset_ordered(c.without(a).without(b), [&](NodeSet s) {
                if (seen.insert(s.bits()).second) out.push_back(s);
                return false;
            });
        }
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    };

    const auto separators = find_separators(
        pairs,
        [&](std::pair<int, int> p) {
            return search_restricted(oracle, p.first, p.second,
                                     candidates_for(p.first, p.second));
        },
        options.exec);

    RecoveryResult raw = run_recovery(oracle, separators, pairs);
    for (auto [i, j] : raw.graph.links())
        if (raw.graph.is_bidirected(i, j))
            throw BidirectedDetectedError("link " + raw.graph.name(i) + " <-> " +
                                          raw.graph.name(j) +
                                          ": oracle is not latent-free dag-isomorphic");
    if (options.complete) raw.graph = detail::complete_marks(raw.graph);
    return LatentFreeResult{
        Pattern{raw.graph,
                options.complete ? PatternStage::Completed : PatternStage::Rudimentary},
        std::move(raw.separators)};
}

}  // namespace causal
