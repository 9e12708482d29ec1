#pragma once

#include <optional>
#include <vector>

#include "causal/graph.hpp"

namespace causal {

/// The query I(x, S, y): is x d-separated from y given S?
struct SeparationQuery {
    int x;
    int y;
    NodeSet given;
};

/// A concrete path between two nodes. step_forward[k] records whether the
/// k-th edge is traversed parent-to-child (nodes[k] -> nodes[k+1]).
struct PathWitness {
    std::vector<int> nodes;
    std::vector<bool> step_forward;

    /// Mark at the first node on its terminal edge: Tail when the path
    /// leaves along an outgoing edge, Arrow when it leaves against one.
    Mark mark_at_start() const { return step_forward.front() ? Mark::Tail : Mark::Arrow; }
    /// Mark at the last node on its terminal edge.
    Mark mark_at_end() const { return step_forward.back() ? Mark::Arrow : Mark::Tail; }
};

/// Standard d-separation, decided by reachability over (node, entry
/// direction) states: linear in the number of edges. A collider on a path is
/// active iff it or one of its descendants is conditioned on; a non-collider
/// is active iff it is not conditioned on.
bool d_separated(const Dag& g, const SeparationQuery& q);
bool d_separated(const Dag& g, int x, int y, NodeSet given);

/// An active (d-connecting) path given S, if one exists. Searches simple
/// paths; used for witness output, not for deciding separation.
std::optional<PathWitness> find_active_path(const Dag& g, int x, int y, NodeSet given);

/// Smallest separator drawn from `candidates`, searching subsets in
/// ascending cardinality with lexicographic tie-break; nullopt when no
/// subset separates. With candidates = all other nodes, nullopt is
/// equivalent to adjacency for latent-free graphs.
std::optional<NodeSet> separable(const Dag& g, int a, int b, NodeSet candidates);

/// Single d-separation test at the pair ancestor set A_{ab}. For latent-free
/// graphs this decides non-adjacency.
bool separated_by_pair_ancestors(const Dag& g, int a, int b);
/// Single test at the pair parent set P_{ab}.
bool separated_by_pair_parents(const Dag& g, int a, int b);

/// Single test at A_{ab} restricted to observables; equivalent to the
/// absence of an inducing path between two observables.
bool separated_over_observables(const Dag& g, int a, int b);

/// A path between observables a and b on which every observable interior
/// node is a collider and every collider lies in A_{ab}; such a path exists
/// iff no subset of the observables separates a from b. Search is a DFS over
/// simple paths carrying the entry mark at each node.
std::optional<PathWitness> find_inducing_path(const Dag& g, int a, int b);

/// What terminal marks are achievable across all inducing paths of a pair.
/// head_at_a / head_at_b may be witnessed by different paths.
struct InducingProfile {
    bool exists = false;
    bool head_at_a = false;
    bool head_at_b = false;
};

InducingProfile inducing_profile(const Dag& g, int a, int b);

}  // namespace causal
