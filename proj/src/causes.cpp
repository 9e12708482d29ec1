#include "causal/causes.hpp"

#include <algorithm>

#include "causal/separation.hpp"

namespace causal {

namespace {

// Per-pair link states of a canonical candidate.
enum class LinkState : int { None = 0, Forward = 1, Backward = 2, Latent = 3 };

struct CandidateFamily {
    int vars;
    std::vector<std::pair<int, int>> pairs;  // (i < j)
    std::size_t combos;                      // 4^pairs
};

CandidateFamily family_for(const IndependenceOracle& o) {
    CandidateFamily f;
    f.vars = o.variable_count();
    for (int i = 0; i < f.vars; ++i)
        for (int j = i + 1; j < f.vars; ++j) f.pairs.emplace_back(i, j);
    f.combos = 1;
    for (std::size_t k = 0; k < f.pairs.size(); ++k) f.combos *= 4;
    return f;
}

std::vector<LinkState> decode(const CandidateFamily& f, std::size_t combo) {
    std::vector<LinkState> states(f.pairs.size());
    for (std::size_t k = 0; k < f.pairs.size(); ++k) {
        states[k] = static_cast<LinkState>(combo % 4);
        combo /= 4;
    }
    return states;
}

// Builds the candidate dag: observables first (indices match the oracle),
// then one latent per Latent link. Returns nullopt when the directed part is
// cyclic or the node budget is exceeded.
std::optional<Dag> build_candidate(const IndependenceOracle& o, const CandidateFamily& f,
                                   const std::vector<LinkState>& states, int node_budget) {
    int latents = 0;
    for (LinkState s : states)
        if (s == LinkState::Latent) ++latents;
    if (node_budget >= 0 && f.vars + latents > node_budget) return std::nullopt;

    Dag d;
    for (const auto& name : o.variables()) d.add_node(name);
    try {
        for (std::size_t k = 0; k < f.pairs.size(); ++k) {
            auto [i, j] = f.pairs[k];
            switch (states[k]) {
                case LinkState::None:
                    break;
                case LinkState::Forward:
                    d = d.with_edge(i, j);
                    break;
                case LinkState::Backward:
                    d = d.with_edge(j, i);
                    break;
                case LinkState::Latent: {
                    int h = d.add_node("h_" + o.variables()[static_cast<std::size_t>(i)] + "_" +
                                           o.variables()[static_cast<std::size_t>(j)],
                                       /*latent=*/true);
                    d = d.with_edge(h, i).with_edge(h, j);
                    break;
                }
            }
        }
    } catch (const CycleError&) {
        return std::nullopt;
    }
    return d;
}

// Every independence the candidate displays over the observables must hold
// in the oracle. Observables occupy indices 0..vars-1 in the candidate, so
// conditioning masks transfer unchanged.
bool is_imap(const Dag& candidate, const IndependenceOracle& o) {
    const int n = o.variable_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            NodeSet pool = NodeSet::full(n).without(a).without(b);
            bool bad = for_each_subset_ordered(pool, [&](NodeSet s) {
                return d_separated(candidate, a, b, s) && !o.holds(a, s, b);
            });
            if (bad) return false;
        }
    return true;
}

// Edge-minimal at the link level: dropping any present link (a latent
// counts as one unit) must break the I-map property.
bool is_minimal(const IndependenceOracle& o, const CandidateFamily& f,
                const std::vector<LinkState>& states, int node_budget) {
    for (std::size_t k = 0; k < f.pairs.size(); ++k) {
        if (states[k] == LinkState::None) continue;
        std::vector<LinkState> reduced = states;
        reduced[k] = LinkState::None;
        std::optional<Dag> d = build_candidate(o, f, reduced, node_budget);
        if (d && is_imap(*d, o)) return false;
    }
    return true;
}

EmbeddedPattern structural_pattern(const IndependenceOracle& o, const CandidateFamily& f,
                                   const std::vector<LinkState>& states) {
    HybridGraph h(o.variables());
    for (std::size_t k = 0; k < f.pairs.size(); ++k) {
        auto [i, j] = f.pairs[k];
        switch (states[k]) {
            case LinkState::None:
                break;
            case LinkState::Forward:
                h.set_link(i, j, Mark::Tail, Mark::Arrow);
                break;
            case LinkState::Backward:
                h.set_link(i, j, Mark::Arrow, Mark::Tail);
                break;
            case LinkState::Latent:
                h.set_link(i, j, Mark::Arrow, Mark::Arrow);
                break;
        }
    }
    return EmbeddedPattern{h, PatternStage::Completed};
}

}  // namespace

PatternSet consistent_patterns(const IndependenceOracle& oracle, int node_budget, Exec exec) {
    if (oracle.variable_count() > 4)
        throw TooManyVariablesError("pattern enumeration is capped at 4 variables, got " +
                                    std::to_string(oracle.variable_count()));
    const CandidateFamily f = family_for(oracle);
    if (node_budget < 0)
        node_budget = f.vars + static_cast<int>(f.pairs.size());

    std::vector<char> keep(f.combos, 0);
    const auto evaluate = [&](std::size_t combo) {
        const std::vector<LinkState> states = decode(f, combo);
        std::optional<Dag> d = build_candidate(oracle, f, states, node_budget);
        return d && is_imap(*d, oracle) && is_minimal(oracle, f, states, node_budget);
    };

    const long long total = static_cast<long long>(f.combos);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long combo = 0; combo < total; ++combo)
            keep[static_cast<std::size_t>(combo)] = evaluate(static_cast<std::size_t>(combo));
    } else {
        for (long long combo = 0; combo < total; ++combo)
            keep[static_cast<std::size_t>(combo)] = evaluate(static_cast<std::size_t>(combo));
    }

    PatternSet out;
    out.node_budget = node_budget;
    for (std::size_t combo = 0; combo < f.combos; ++combo)
        if (keep[combo]) out.patterns.push_back(structural_pattern(oracle, f, decode(f, combo)));
    return out;
}

CauseVerdict classify_cause(const PatternSet& set, int cause, int effect) {
    CauseVerdict v;
    bool all = !set.patterns.empty();
    for (const EmbeddedPattern& p : set.patterns) {
        const bool fwd = p.graph.linked(cause, effect) && p.graph.is_directed(cause, effect);
        const bool rev = p.graph.linked(cause, effect) && p.graph.is_directed(effect, cause);
        v.in_some = v.in_some || fwd;
        v.reverse_in_some = v.reverse_in_some || rev;
        all = all && fwd;
    }
    v.in_all = all;
    return v;
}

bool genuine_cause(const IndependenceOracle& oracle, int cause, int effect) {
    return classify_cause(consistent_patterns(oracle), cause, effect).in_all;
}

bool potential_cause(const IndependenceOracle& oracle, int cause, int effect, bool inclusive) {
    const CauseVerdict v = classify_cause(consistent_patterns(oracle), cause, effect);
    if (inclusive) return v.in_some && !v.reverse_in_some;
    return v.in_some && !v.reverse_in_some && !v.in_all;
}

}  // namespace causal
