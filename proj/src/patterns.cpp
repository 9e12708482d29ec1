#include "causal/patterns.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "completion.hpp"

namespace causal {

namespace {

void require_latent_free(const Dag& g, const char* op) {
    if (!g.latents().empty())
        throw Error(std::string(op) + ": graph has latent nodes; use the embedded operations");
}

void require_pattern_marks(const HybridGraph& g, const char* op) {
    for (auto [i, j] : g.links())
        if (g.is_bidirected(i, j))
            throw Error(std::string(op) + ": bidirected link " + g.name(i) + " <-> " + g.name(j) +
                        " is not allowed in a latent-free pattern");
}

}  // namespace

std::vector<Vee> uncoupled_colliders(const Dag& g) {
    std::vector<Vee> out;
    for (int c = 0; c < g.node_count(); ++c) {
        const NodeSet ps = g.parents(c);
        for (int a : ps)
            for (int b : ps) {
                if (b <= a) continue;
                if (!g.adjacent_pair(a, b)) out.push_back(Vee{a, c, b});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::set<std::pair<std::string, std::string>> named_skeleton(const Dag& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [i, j] : skeleton(g)) {
        std::string a = g.name(i), b = g.name(j);
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

std::set<std::tuple<std::string, std::string, std::string>> named_vees(const Dag& g) {
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (const Vee& v : uncoupled_colliders(g)) {
        std::string a = g.name(v.a), b = g.name(v.b);
        if (b < a) std::swap(a, b);
        out.insert({a, g.name(v.c), b});
    }
    return out;
}

}  // namespace

bool equivalent(const Dag& d1, const Dag& d2) {
    require_latent_free(d1, "equivalent");
    require_latent_free(d2, "equivalent");
    std::vector<std::string> n1 = d1.names(), n2 = d2.names();
    std::sort(n1.begin(), n1.end());
    std::sort(n2.begin(), n2.end());
    if (n1 != n2) throw NodeSetMismatchError("graphs are over different node sets");
    return named_skeleton(d1) == named_skeleton(d2) && named_vees(d1) == named_vees(d2);
}

Pattern rudimentary_pattern(const Dag& g) {
    require_latent_free(g, "rudimentary_pattern");
    HybridGraph h(g.names());
    for (auto [i, j] : skeleton(g)) h.set_link(i, j, Mark::Tail, Mark::Tail);
    for (const Vee& v : uncoupled_colliders(g)) {
        h.add_arrow(v.a, v.c);
        h.add_arrow(v.b, v.c);
    }
    return Pattern{h, PatternStage::Rudimentary};
}

Pattern complete_pattern(const Pattern& p) {
    require_pattern_marks(p.graph, "complete_pattern");
    return Pattern{detail::complete_marks(p.graph), PatternStage::Completed};
}

std::vector<Dag> enumerate_class(const Pattern& p, int node_bound) {
    const HybridGraph& h = p.graph;
    if (h.node_count() > node_bound)
        throw SizeBoundError("pattern has " + std::to_string(h.node_count()) +
                             " nodes, enumeration bound is " + std::to_string(node_bound));
    require_pattern_marks(h, "enumerate_class");

    const auto allowed_vees = detail::hybrid_vees(h);
    std::vector<std::pair<int, int>> undirected;
    for (auto [i, j] : h.links())
        if (h.is_undirected(i, j)) undirected.push_back({i, j});

    std::vector<Dag> out;
    HybridGraph work = h;

    // Arrow at `to` is admissible when it closes no directed cycle and
    // forms no head-to-head pair outside the pattern's own colliders.
    auto admissible = [&](int from, int to) {
        for (int x = 0; x < work.node_count(); ++x) {
            if (x == from || x == to || work.mark_at(x, to) != Mark::Arrow) continue;
            if (work.linked(x, from)) continue;
            int lo = std::min(x, from), hi = std::max(x, from);
            if (!allowed_vees.count({lo, to, hi})) return false;
        }
        return !detail::has_strictly_directed_cycle(work);
    };

    auto emit = [&]() {
        Dag d;
        for (const auto& n : work.names()) d.add_node(n);
        for (auto [i, j] : work.links()) {
            if (work.is_directed(i, j))
                d = d.with_edge(i, j);
            else
                d = d.with_edge(j, i);
        }
        out.push_back(std::move(d));
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == undirected.size()) {
            emit();
            return;
        }
        auto [i, j] = undirected[k];
        for (auto [from, to] : {std::pair{i, j}, std::pair{j, i}}) {
            work.set_link(from, to, Mark::Tail, Mark::Arrow);
            if (admissible(from, to)) self(self, k + 1);
            work.set_link(i, j, Mark::Tail, Mark::Tail);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace causal
