#include "causal/embedded.hpp"

#include <algorithm>
#include <set>

#include "causal/separation.hpp"
#include "completion.hpp"

namespace causal {

namespace {

std::vector<int> observable_nodes(const Dag& g) {
    std::vector<int> out;
    for (int v = 0; v < g.node_count(); ++v)
        if (!g.is_latent(v)) out.push_back(v);
    if (out.empty()) throw NotObservableError("model has no observable nodes");
    return out;
}

struct PairProfiles {
    std::vector<std::string> names;
    // profile for observable-index pair (i, j), i < j, flattened
    std::vector<InducingProfile> at;
    int count = 0;

    const InducingProfile& of(int i, int j) const {
        if (i > j) std::swap(i, j);
        return at[static_cast<std::size_t>(i * count + j)];
    }
};

PairProfiles collect_profiles(const Dag& g, Exec exec) {
    const std::vector<int> obs = observable_nodes(g);
    const int m = static_cast<int>(obs.size());
    PairProfiles p;
    p.count = m;
    for (int v : obs) p.names.push_back(g.name(v));
    p.at.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), InducingProfile{});

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

    const int total = static_cast<int>(pairs.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < total; ++k) {
            auto [i, j] = pairs[static_cast<std::size_t>(k)];
            p.at[static_cast<std::size_t>(i * m + j)] =
                inducing_profile(g, obs[static_cast<std::size_t>(i)],
                                 obs[static_cast<std::size_t>(j)]);
        }
    } else {
        for (int k = 0; k < total; ++k) {
            auto [i, j] = pairs[static_cast<std::size_t>(k)];
            p.at[static_cast<std::size_t>(i * m + j)] =
                inducing_profile(g, obs[static_cast<std::size_t>(i)],
                                 obs[static_cast<std::size_t>(j)]);
        }
    }
    return p;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> embedded_skeleton(const Dag& g, Exec exec) {
    const PairProfiles p = collect_profiles(g, exec);
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < p.count; ++i)
        for (int j = i + 1; j < p.count; ++j)
            if (p.of(i, j).exists)
                out.emplace_back(p.names[static_cast<std::size_t>(i)],
                                 p.names[static_cast<std::size_t>(j)]);
    return out;
}

EmbeddedPattern embedded_rudimentary_pattern(const Dag& g, Exec exec) {
    const PairProfiles p = collect_profiles(g, exec);
    const int m = p.count;

    HybridGraph h(p.names);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (p.of(i, j).exists) h.set_link(i, j, Mark::Tail, Mark::Tail);

    // head achievability at b of the pair (a, b), in pattern index space
    auto head_at = [&](int a, int b) {
        const InducingProfile& pr = p.of(a, b);
        return a < b ? pr.head_at_b : pr.head_at_a;
    };

    // An arrowhead at b on a~b needs a witness c: linked to b, not to a,
    // with both inducing links able to end pointing at b.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !h.linked(a, b) || !head_at(a, b)) continue;
            for (int c = 0; c < m; ++c) {
                if (c == a || c == b) continue;
                if (h.linked(c, b) && !h.linked(a, c) && head_at(c, b)) {
                    h.add_arrow(a, b);
                    break;
                }
            }
        }
    return EmbeddedPattern{h, PatternStage::Rudimentary};
}

EmbeddedPattern complete_embedded_pattern(const EmbeddedPattern& p) {
    return EmbeddedPattern{detail::complete_marks(p.graph), PatternStage::Completed};
}

bool embedded_equivalent(const Dag& g1, const Dag& g2) {
    std::vector<std::string> o1, o2;
    for (int v = 0; v < g1.node_count(); ++v)
        if (!g1.is_latent(v)) o1.push_back(g1.name(v));
    for (int v = 0; v < g2.node_count(); ++v)
        if (!g2.is_latent(v)) o2.push_back(g2.name(v));
    std::sort(o1.begin(), o1.end());
    std::sort(o2.begin(), o2.end());
    if (o1 != o2) throw ObservableSetMismatchError("models expose different observables");
    return embedded_rudimentary_pattern(g1).graph.same_structure(
        embedded_rudimentary_pattern(g2).graph);
}

namespace {

// First acyclic orientation of the undirected links that adds no uncoupled
// head-to-head triple beyond the pattern's own. Deterministic: links in
// index order, i->j tried before j->i.
HybridGraph orient_undirected(HybridGraph g) {
    const auto allowed_vees = detail::hybrid_vees(g);
    std::vector<std::pair<int, int>> undirected;
    for (auto [i, j] : g.links())
        if (g.is_undirected(i, j)) undirected.push_back({i, j});

    auto admissible = [&](int from, int to) {
        for (int x = 0; x < g.node_count(); ++x) {
            if (x == from || x == to || g.mark_at(x, to) != Mark::Arrow) continue;
            if (g.linked(x, from)) continue;
            int lo = std::min(x, from), hi = std::max(x, from);
            if (!allowed_vees.count({lo, to, hi})) return false;
        }
        return !detail::has_strictly_directed_cycle(g);
    };

    bool found = false;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found) return;
        if (k == undirected.size()) {
            found = true;
            return;
        }
        auto [i, j] = undirected[k];
        for (auto [from, to] : {std::pair{i, j}, std::pair{j, i}}) {
            g.set_link(from, to, Mark::Tail, Mark::Arrow);
            if (admissible(from, to)) {
                self(self, k + 1);
                if (found) return;
            }
            g.set_link(i, j, Mark::Tail, Mark::Tail);
        }
    };
    rec(rec, 0);
    if (!found)
        throw InconsistentPatternError("pattern admits no consistent orientation");
    return g;
}

}  // namespace

CanonicalModel canonicalize(const HybridGraph& pattern) {
    if (detail::has_strictly_directed_cycle(pattern))
        throw InconsistentPatternError("pattern contains a directed cycle");
    HybridGraph oriented = orient_undirected(pattern);

    CanonicalModel model;
    for (const auto& n : oriented.names()) model.dag.add_node(n);

    auto fresh_latent = [&](const std::string& a, const std::string& b) {
        std::string base = "h_" + a + "_" + b;
        std::string name = base;
        for (int k = 2; model.dag.has_node(name); ++k) name = base + "_" + std::to_string(k);
        return name;
    };

    for (auto [i, j] : oriented.links()) {
        if (oriented.is_bidirected(i, j)) {
            const std::string a = oriented.name(i), b = oriented.name(j);
            const std::string h = fresh_latent(a, b);
            model.dag.add_node(h, /*latent=*/true);
            model.dag = model.dag.with_edge(h, a).with_edge(h, b);
            model.latent_witness.emplace_back(a, b, h);
        } else if (oriented.is_directed(i, j)) {
            model.dag = model.dag.with_edge(i, j);
        } else {
            model.dag = model.dag.with_edge(j, i);
        }
    }
    return model;
}

CanonicalModel canonicalize(const EmbeddedPattern& pattern) { return canonicalize(pattern.graph); }

std::string model_count_bound(int n_observables) {
    if (n_observables < 1) throw Error("model_count_bound requires at least one observable");
    // 5^(n^2) exactly, little-endian decimal digits
    const long long exponent =
        static_cast<long long>(n_observables) * static_cast<long long>(n_observables);
    std::vector<int> digits{1};
    for (long long e = 0; e < exponent; ++e) {
        int carry = 0;
        for (int& d : digits) {
            int v = d * 5 + carry;
            d = v % 10;
            carry = v / 10;
        }
        while (carry) {
            digits.push_back(carry % 10);
            carry /= 10;
        }
    }
    std::string out;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        out.push_back(static_cast<char>('0' + *it));
    return out;
}

}  // namespace causal
