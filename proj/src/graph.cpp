#include "causal/graph.hpp"

#include <algorithm>

namespace causal {

// ---------------------------------------------------------------------------
// Dag

int Dag::add_node(const std::string& name, bool latent) {
    if (node_count() >= NodeSet::kMaxNodes)
        throw CapacityError("graph exceeds " + std::to_string(NodeSet::kMaxNodes) + " nodes");
    if (has_node(name)) throw DuplicateEdgeError("duplicate node '" + name + "'");
    names_.push_back(name);
    parents_.emplace_back();
    children_.emplace_back();
    int idx = node_count() - 1;
    if (latent) latent_.insert(idx);
    return idx;
}

void Dag::check_node(int i) const {
    if (i < 0 || i >= node_count())
        throw UnknownNodeError("node index " + std::to_string(i) + " out of range");
}

bool Dag::has_node(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int Dag::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UnknownNodeError("unknown node '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

Dag Dag::with_edge(int parent, int child) const {
    check_node(parent);
    check_node(child);
    if (parent == child) throw SelfLoopError("self-loop on '" + name(parent) + "'");
    if (has_edge(parent, child))
        throw DuplicateEdgeError("duplicate edge " + name(parent) + " -> " + name(child));
    // The edge closes a cycle exactly when parent is reachable from child.
    if (descendants(child).contains(parent) || has_edge(child, parent))
        throw CycleError("edge " + name(parent) + " -> " + name(child) +
                         " would close a directed cycle");
    Dag g = *this;
    g.parents_[static_cast<std::size_t>(child)].insert(parent);
    g.children_[static_cast<std::size_t>(parent)].insert(child);
    return g;
}

Dag Dag::with_edge(const std::string& parent, const std::string& child) const {
    return with_edge(index_of(parent), index_of(child));
}

int Dag::edge_count() const {
    int total = 0;
    for (const NodeSet& c : children_) total += c.size();
    return total;
}

std::vector<std::pair<int, int>> Dag::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < node_count(); ++p)
        for (int c : children(p)) out.emplace_back(p, c);
    return out;
}

NodeSet Dag::ancestors(int x) const {
    check_node(x);
    NodeSet seen;
    NodeSet frontier = parents(x);
    while (!frontier.empty()) {
        seen |= frontier;
        NodeSet next;
        for (int v : frontier) next |= parents(v);
        frontier = next - seen;
    }
    return seen.without(x);
}

NodeSet Dag::descendants(int x) const {
    check_node(x);
    NodeSet seen;
    NodeSet frontier = children(x);
    while (!frontier.empty()) {
        seen |= frontier;
        NodeSet next;
        for (int v : frontier) next |= children(v);
        frontier = next - seen;
    }
    return seen.without(x);
}

NodeSet Dag::ancestors_of_set(NodeSet s) const {
    NodeSet out;
    for (int v : s) out |= ancestors(v);
    return out;
}

std::vector<int> Dag::topological_order() const {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(node_count()));
    NodeSet placed;
    while (static_cast<int>(order.size()) < node_count()) {
        for (int v = 0; v < node_count(); ++v) {
            if (placed.contains(v)) continue;
            if (parents(v).subset_of(placed)) {
                order.push_back(v);
                placed.insert(v);
            }
        }
    }
    return order;
}

Dag make_dag(const std::vector<std::string>& nodes,
             const std::vector<std::pair<std::string, std::string>>& edges,
             const std::vector<std::string>& latent) {
    Dag g;
    for (const auto& n : nodes) {
        bool lat = std::find(latent.begin(), latent.end(), n) != latent.end();
        g.add_node(n, lat);
    }
    for (const auto& [p, c] : edges) g = g.with_edge(p, c);
    return g;
}

NodeSet pair_ancestors(const Dag& g, int a, int b) {
    return (g.ancestors(a) | g.ancestors(b)).without(a).without(b);
}

NodeSet pair_parents(const Dag& g, int a, int b) {
    return (g.parents(a) | g.parents(b)).without(a).without(b);
}

// ---------------------------------------------------------------------------
// HybridGraph

HybridGraph::HybridGraph(std::vector<std::string> names) : names_(std::move(names)) {
    if (static_cast<int>(names_.size()) > NodeSet::kMaxNodes)
        throw CapacityError("graph exceeds " + std::to_string(NodeSet::kMaxNodes) + " nodes");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw DuplicateEdgeError("duplicate node '" + names_[i] + "'");
    at_.assign(names_.size() * names_.size(), Mark::None);
}

int HybridGraph::add_node(const std::string& name) {
    if (has_node(name)) throw DuplicateEdgeError("duplicate node '" + name + "'");
    std::vector<std::string> names = names_;
    names.push_back(name);
    HybridGraph grown(std::move(names));
    for (int i = 0; i < node_count(); ++i)
        for (int j = 0; j < node_count(); ++j) grown.at_[grown.flat(i, j)] = at_[flat(i, j)];
    *this = std::move(grown);
    return node_count() - 1;
}

void HybridGraph::check_node(int i) const {
    if (i < 0 || i >= node_count())
        throw UnknownNodeError("node index " + std::to_string(i) + " out of range");
}

bool HybridGraph::has_node(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int HybridGraph::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UnknownNodeError("unknown node '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

void HybridGraph::set_link(int i, int j, Mark at_i, Mark at_j) {
    check_node(i);
    check_node(j);
    if (i == j) throw SelfLoopError("self-loop on '" + name(i) + "'");
    if (at_i == Mark::None || at_j == Mark::None)
        throw Error("link marks must be Tail or Arrow");
    at_[flat(j, i)] = at_i;
    at_[flat(i, j)] = at_j;
}

void HybridGraph::remove_link(int i, int j) {
    check_node(i);
    check_node(j);
    at_[flat(i, j)] = Mark::None;
    at_[flat(j, i)] = Mark::None;
}

void HybridGraph::add_arrow(int i, int j) {
    check_node(i);
    check_node(j);
    if (!linked(i, j)) throw Error("no link " + name(i) + " ~ " + name(j));
    at_[flat(i, j)] = Mark::Arrow;
}

NodeSet HybridGraph::neighbors(int i) const {
    check_node(i);
    NodeSet out;
    for (int j = 0; j < node_count(); ++j)
        if (j != i && linked(i, j)) out.insert(j);
    return out;
}

int HybridGraph::link_count() const {
    int total = 0;
    for (int i = 0; i < node_count(); ++i)
        for (int j = i + 1; j < node_count(); ++j)
            if (linked(i, j)) ++total;
    return total;
}

std::vector<std::pair<int, int>> HybridGraph::links() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < node_count(); ++i)
        for (int j = i + 1; j < node_count(); ++j)
            if (linked(i, j)) out.emplace_back(i, j);
    return out;
}

bool HybridGraph::same_structure(const HybridGraph& other) const {
    if (node_count() != other.node_count()) return false;
    std::vector<std::string> a = names_, b = other.names_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    for (int i = 0; i < node_count(); ++i) {
        int oi = other.index_of(name(i));
        for (int j = 0; j < node_count(); ++j) {
            if (i == j) continue;
            int oj = other.index_of(name(j));
            if (mark_at(i, j) != other.mark_at(oi, oj)) return false;
        }
    }
    return true;
}

HybridGraph to_hybrid(const Dag& g) {
    HybridGraph h(g.names());
    for (auto [p, c] : g.edges()) h.set_link(p, c, Mark::Tail, Mark::Arrow);
    return h;
}

std::vector<std::pair<int, int>> skeleton(const Dag& g) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.node_count(); ++i)
        for (int j = i + 1; j < g.node_count(); ++j)
            if (g.adjacent_pair(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> skeleton(const HybridGraph& g) { return g.links(); }

}  // namespace causal
