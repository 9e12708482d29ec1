#pragma once

#include <vector>

#include "causal/embedded.hpp"
#include "causal/exec.hpp"
#include "causal/oracle.hpp"

namespace causal {

/// The model set: every pattern consistent with an oracle, generated through
/// the canonical family (per pair of variables: no link, either direction,
/// or a single hidden common cause). A pattern is consistent when its
/// realization is an edge-minimal I-map of the oracle's independences.
struct PatternSet {
    std::vector<EmbeddedPattern> patterns;
    int node_budget = 0;  // total nodes allowed per candidate, latents included
};

/// Enumerates the consistent patterns. The variable count is hard-capped at
/// four (TooManyVariablesError): the enumeration is exponential and no
/// efficient alternative is known. node_budget < 0 means no extra bound
/// beyond one latent per pair.
PatternSet consistent_patterns(const IndependenceOracle& oracle, int node_budget = -1,
                               Exec exec = Exec::Parallel);

struct CauseVerdict {
    bool in_all = false;          // c -> e in every consistent pattern
    bool in_some = false;         // c -> e in some consistent pattern
    bool reverse_in_some = false;  // e -> c in some consistent pattern

    enum class Tier { Genuine, Potential, Undetermined };
    /// Exclusive tiers: Genuine when the arrow is everywhere, Potential when
    /// it occurs somewhere and is never reversed (and is not genuine).
    Tier tier() const {
        if (in_all) return Tier::Genuine;
        if (in_some && !reverse_in_some) return Tier::Potential;
        return Tier::Undetermined;
    }
};

/// Flags for the pair (cause, effect) against a computed pattern set. Only a
/// singly-directed link counts as the arrow c -> e; undirected and
/// bidirected links do not.
CauseVerdict classify_cause(const PatternSet& set, int cause, int effect);

/// True iff every consistent pattern contains the directed arrow c -> e.
bool genuine_cause(const IndependenceOracle& oracle, int cause, int effect);

/// True iff some consistent pattern contains c -> e and none contains the
/// reverse. Exclusive by default (a genuine cause is not also potential);
/// `inclusive` switches to the reading where genuine is a special case.
bool potential_cause(const IndependenceOracle& oracle, int cause, int effect,
                     bool inclusive = false);

}  // namespace causal
