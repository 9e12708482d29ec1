#pragma once

#include <vector>

#include "causal/graph.hpp"

namespace causal {

/// An uncoupled head-to-head triple a -> c <- b with a, b non-adjacent.
/// Endpoints are stored with a < b.
struct Vee {
    int a;
    int c;
    int b;
    bool operator==(const Vee&) const = default;
    bool operator<(const Vee& o) const {
        if (a != o.a) return a < o.a;
        if (c != o.c) return c < o.c;
        return b < o.b;
    }
};

enum class PatternStage { Rudimentary, Completed };

/// Canonical representative of a latent-free equivalence class: the skeleton
/// of any member with arrowheads only where all members agree. Links are
/// restricted to undirected and singly-directed; bidirected marks never occur.
struct Pattern {
    HybridGraph graph;
    PatternStage stage = PatternStage::Rudimentary;
};

/// All uncoupled head-to-head triples of a dag, ordered.
std::vector<Vee> uncoupled_colliders(const Dag& g);

/// Theorem-level equivalence test for latent-free models: same skeleton and
/// same uncoupled colliders. Node label sets must coincide.
bool equivalent(const Dag& d1, const Dag& d2);

/// Skeleton of g with arrowheads kept exactly on links that take part in an
/// uncoupled collider. Equivalent dags map to the identical pattern.
Pattern rudimentary_pattern(const Dag& g);

/// Fixpoint of the orientation rules: an undirected link is directed when
/// the opposite orientation would create a new uncoupled collider or a
/// directed cycle in every extension. Idempotent; throws
/// InconsistentPatternError when both orientations get forced.
Pattern complete_pattern(const Pattern& p);

/// Every acyclic orientation of the undirected links that creates no new
/// uncoupled collider; exactly the members of the equivalence class.
std::vector<Dag> enumerate_class(const Pattern& p, int node_bound = 10);

}  // namespace causal
