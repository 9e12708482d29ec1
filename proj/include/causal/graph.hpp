#pragma once

#include <string>
#include <utility>
#include <vector>

#include "causal/errors.hpp"
#include "causal/nodeset.hpp"

namespace causal {

/// A labeled directed acyclic graph, optionally partitioned into observable
/// and latent nodes. Node indices are dense and follow insertion order, which
/// fixes the iteration order of every algorithm downstream. Instances are
/// immutable once edges are in place: edge insertion returns a new graph.
class Dag {
public:
    Dag() = default;

    /// Appends a node. Labels must be unique; indices are contiguous from 0.
    int add_node(const std::string& name, bool latent = false);

    /// Returns a copy of this graph with the edge parent->child added.
    /// Throws CycleError, SelfLoopError, DuplicateEdgeError, UnknownNodeError.
    Dag with_edge(int parent, int child) const;
    Dag with_edge(const std::string& parent, const std::string& child) const;

    int node_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const;

    bool has_node(const std::string& name) const;
    /// Index of a named node; throws UnknownNodeError.
    int index_of(const std::string& name) const;
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    bool is_latent(int i) const { return latent_.contains(i); }
    NodeSet latents() const { return latent_; }
    NodeSet observables() const { return NodeSet::full(node_count()) - latent_; }

    NodeSet parents(int i) const { return parents_[static_cast<std::size_t>(i)]; }
    NodeSet children(int i) const { return children_[static_cast<std::size_t>(i)]; }
    NodeSet adjacent(int i) const { return parents(i) | children(i); }
    bool has_edge(int parent, int child) const { return children(parent).contains(child); }
    bool adjacent_pair(int a, int b) const { return adjacent(a).contains(b); }

    /// Edges as (parent, child) pairs, ordered by (parent, child) index.
    std::vector<std::pair<int, int>> edges() const;

    /// All nodes with a directed path to x, excluding x itself.
    NodeSet ancestors(int x) const;
    /// All nodes reachable from x along directed edges, excluding x itself.
    NodeSet descendants(int x) const;
    /// Union of ancestors of every member of s (members included only if
    /// they are ancestors of another member).
    NodeSet ancestors_of_set(NodeSet s) const;

    /// One topological order (by index among ready nodes).
    std::vector<int> topological_order() const;

    bool operator==(const Dag&) const = default;

private:
    void check_node(int i) const;

    std::vector<std::string> names_;
    NodeSet latent_;
    std::vector<NodeSet> parents_;
    std::vector<NodeSet> children_;
};

/// Builds a dag in one call; edges are (parent, child) name pairs.
Dag make_dag(const std::vector<std::string>& nodes,
             const std::vector<std::pair<std::string, std::string>>& edges,
             const std::vector<std::string>& latent = {});

/// Ancestor set A_{ab}: ancestors(a) | ancestors(b), minus both endpoints.
NodeSet pair_ancestors(const Dag& g, int a, int b);
/// Parent set P_{ab}: parents(a) | parents(b), minus both endpoints.
NodeSet pair_parents(const Dag& g, int a, int b);

/// Mark carried by a link at one of its endpoints.
enum class Mark : std::uint8_t { None = 0, Tail = 1, Arrow = 2 };

/// Graph whose links carry an endpoint mark at each end. The four mark
/// combinations encode a--b, a->b, a<-b and a<->b. At most one link per node
/// pair, no self-loops.
class HybridGraph {
public:
    HybridGraph() = default;
    explicit HybridGraph(std::vector<std::string> names);

    int node_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    bool has_node(const std::string& name) const;
    int index_of(const std::string& name) const;

    int add_node(const std::string& name);

    /// Mark at `j` on the link i~j; None when the pair is not linked.
    Mark mark_at(int i, int j) const { return at_[flat(i, j)]; }
    bool linked(int i, int j) const { return mark_at(i, j) != Mark::None; }

    void set_link(int i, int j, Mark at_i, Mark at_j);
    void remove_link(int i, int j);
    /// Upgrades the mark at `j` on an existing link to Arrow.
    void add_arrow(int i, int j);

    bool is_undirected(int i, int j) const {
        return mark_at(i, j) == Mark::Tail && mark_at(j, i) == Mark::Tail;
    }
    bool is_directed(int from, int to) const {
        return mark_at(from, to) == Mark::Arrow && mark_at(to, from) == Mark::Tail;
    }
    bool is_bidirected(int i, int j) const {
        return mark_at(i, j) == Mark::Arrow && mark_at(j, i) == Mark::Arrow;
    }

    NodeSet neighbors(int i) const;
    int link_count() const;
    /// Links as index pairs (i < j), ordered.
    std::vector<std::pair<int, int>> links() const;

    /// Structural equality over node names: same name set, same links with
    /// the same marks, regardless of index order.
    bool same_structure(const HybridGraph& other) const;

private:
    std::size_t flat(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(names_.size()) +
               static_cast<std::size_t>(j);
    }
    void check_node(int i) const;

    std::vector<std::string> names_;
    std::vector<Mark> at_;
};

/// Hybrid view of a dag: every edge parent->child becomes Tail/Arrow.
HybridGraph to_hybrid(const Dag& g);

/// Unordered adjacent pairs (i < j), marks erased.
std::vector<std::pair<int, int>> skeleton(const Dag& g);
std::vector<std::pair<int, int>> skeleton(const HybridGraph& g);

}  // namespace causal
