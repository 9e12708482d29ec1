#include "causal/separation.hpp"

#include <algorithm>

namespace causal {

namespace {

void check_query(const Dag& g, const SeparationQuery& q) {
    if (q.x < 0 || q.x >= g.node_count() || q.y < 0 || q.y >= g.node_count())
        throw UnknownNodeError("query endpoint out of range");
    if (!q.given.subset_of(NodeSet::full(g.node_count())))
        throw UnknownNodeError("conditioning set contains unknown nodes");
    if (q.x == q.y) throw OverlapError("query endpoints coincide");
    if (q.given.contains(q.x) || q.given.contains(q.y))
        throw OverlapError("conditioning set overlaps a query endpoint");
}

// Nodes at which a collider is active given S: S together with the
// ancestors of S.
NodeSet collider_enablers(const Dag& g, NodeSet given) {
    return given | g.ancestors_of_set(given);
}

}  // namespace

bool d_separated(const Dag& g, const SeparationQuery& q) {
    check_query(g, q);
    const int n = g.node_count();
    const NodeSet enablers = collider_enablers(g, q.given);

    // State: node + how it was entered. FromParent means the entering edge
    // carries an arrowhead at the node; FromChild means a tail.
    enum : int { FromChild = 0, FromParent = 1 };
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    std::vector<std::pair<int, int>> stack;

    auto push = [&](int v, int how) {
        if (v == q.y) return true;
        std::size_t id = static_cast<std::size_t>(2 * v + how);
        if (!seen[id]) {
            seen[id] = true;
            stack.emplace_back(v, how);
        }
        return false;
    };

    for (int p : g.parents(q.x))
        if (push(p, FromChild)) return false;
    for (int c : g.children(q.x))
        if (push(c, FromParent)) return false;

    while (!stack.empty()) {
        auto [v, how] = stack.back();
        stack.pop_back();
        const bool in_s = q.given.contains(v);
        if (how == FromChild) {
            // (tail, tail) and (tail, head) transits are non-colliders.
            if (!in_s) {
                for (int p : g.parents(v))
                    if (push(p, FromChild)) return false;
                for (int c : g.children(v))
                    if (push(c, FromParent)) return false;
            }
        } else {
            // Entered through an arrowhead: children continue a chain,
            // parents make v a collider.
            if (!in_s) {
                for (int c : g.children(v))
                    if (push(c, FromParent)) return false;
            }
            if (enablers.contains(v)) {
                for (int p : g.parents(v))
                    if (push(p, FromChild)) return false;
            }
        }
    }
    return true;
}

bool d_separated(const Dag& g, int x, int y, NodeSet given) {
    return d_separated(g, SeparationQuery{x, y, given});
}

std::optional<PathWitness> find_active_path(const Dag& g, int x, int y, NodeSet given) {
    check_query(g, SeparationQuery{x, y, given});
    const NodeSet enablers = collider_enablers(g, given);

    PathWitness path;
    path.nodes.push_back(x);
    NodeSet visited = NodeSet::of({x});
    bool found = false;

    // DFS over simple paths; prev_mark is the mark at the current node of
    // the edge we arrived through.
    auto dfs = [&](auto&& self, int v, Mark prev_mark) -> void {
        if (found) return;
        auto try_step = [&](int w, bool forward) {
            if (found || visited.contains(w)) return;
            if (v != x) {
                // Interior activity: collider iff entered and left through
                // arrowheads at v.
                const Mark out_mark = forward ? Mark::Tail : Mark::Arrow;
                const bool collider = prev_mark == Mark::Arrow && out_mark == Mark::Arrow;
                if (collider ? !enablers.contains(v) : given.contains(v)) return;
            }
            path.nodes.push_back(w);
            path.step_forward.push_back(forward);
            if (w == y) {
                found = true;
                return;
            }
            visited.insert(w);
            self(self, w, forward ? Mark::Arrow : Mark::Tail);
            if (found) return;
            visited.erase(w);
            path.nodes.pop_back();
            path.step_forward.pop_back();
        };
        for (int c : g.children(v)) try_step(c, true);
        for (int p : g.parents(v)) try_step(p, false);
    };
    dfs(dfs, x, Mark::Tail);

    if (!found) return std::nullopt;
    return path;
}

std::optional<NodeSet> separable(const Dag& g, int a, int b, NodeSet candidates) {
    if (a < 0 || a >= g.node_count() || b < 0 || b >= g.node_count())
        throw UnknownNodeError("pair endpoint out of range");
    candidates = candidates.without(a).without(b);
    std::optional<NodeSet> result;
    for_each_subset_ordered(candidates, [&](NodeSet s) {
        if (d_separated(g, a, b, s)) {
            result = s;
            return true;
        }
        return false;
    });
    return result;
}

bool separated_by_pair_ancestors(const Dag& g, int a, int b) {
    return d_separated(g, a, b, pair_ancestors(g, a, b));
}

bool separated_by_pair_parents(const Dag& g, int a, int b) {
    return d_separated(g, a, b, pair_parents(g, a, b));
}

namespace {

void check_observable_pair(const Dag& g, int a, int b) {
    if (a < 0 || a >= g.node_count() || b < 0 || b >= g.node_count())
        throw UnknownNodeError("pair endpoint out of range");
    if (g.is_latent(a) || g.is_latent(b))
        throw NotObservableError("endpoints must be observable");
    if (a == b) throw OverlapError("pair endpoints coincide");
}

// DFS over simple paths obeying the two inducing-path conditions. Reports
// terminal-mark achievability and keeps the first full witness found.
struct InducingSearch {
    const Dag& g;
    int a, b;
    NodeSet anc_pair;
    InducingProfile profile;
    std::optional<PathWitness> witness;
    PathWitness path;
    NodeSet visited;

    bool done() const { return profile.exists && profile.head_at_a && profile.head_at_b; }

    void run() {
        anc_pair = pair_ancestors(g, a, b);
        path.nodes.push_back(a);
        visited = NodeSet::of({a});
        dfs(a, Mark::Tail);
    }

    void record() {
        profile.exists = true;
        if (path.step_forward.front() == false) profile.head_at_a = true;
        if (path.step_forward.back() == true) profile.head_at_b = true;
        if (!witness) witness = path;
    }

    void dfs(int v, Mark prev_mark) {
        if (done()) return;
        auto try_step = [&](int w, bool forward) {
            if (done() || visited.contains(w)) return;
            if (v != a) {
                // Condition 2: a collider must be an ancestor of a or b.
                // Condition 1: an observable interior node must be a collider.
                const Mark out_mark = forward ? Mark::Tail : Mark::Arrow;
                const bool collider = prev_mark == Mark::Arrow && out_mark == Mark::Arrow;
                if (collider) {
                    if (!anc_pair.contains(v)) return;
                } else if (!g.is_latent(v)) {
                    return;
                }
            }
            path.nodes.push_back(w);
            path.step_forward.push_back(forward);
            if (w == b) {
                record();
            } else {
                visited.insert(w);
                dfs(w, forward ? Mark::Arrow : Mark::Tail);
                visited.erase(w);
            }
            path.nodes.pop_back();
            path.step_forward.pop_back();
        };
        for (int c : g.children(v)) try_step(c, true);
        for (int p : g.parents(v)) try_step(p, false);
    }
};

}  // namespace

bool separated_over_observables(const Dag& g, int a, int b) {
    check_observable_pair(g, a, b);
    return d_separated(g, a, b, pair_ancestors(g, a, b) & g.observables());
}

std::optional<PathWitness> find_inducing_path(const Dag& g, int a, int b) {
    check_observable_pair(g, a, b);
    InducingSearch search{g, a, b, {}, {}, {}, {}, {}};
    search.run();
    return search.witness;
}

InducingProfile inducing_profile(const Dag& g, int a, int b) {
    check_observable_pair(g, a, b);
    InducingSearch search{g, a, b, {}, {}, {}, {}, {}};
    search.run();
    return search.profile;
}

}  // namespace causal
