#pragma once

#include <string>
#include <utility>
#include <vector>

#include "causal/exec.hpp"
#include "causal/graph.hpp"
#include "causal/patterns.hpp"

namespace causal {

/// Pattern of a latent-variable model over its observables. All four link
/// types can occur; a bidirected link records a hidden common cause.
struct EmbeddedPattern {
    HybridGraph graph;
    PatternStage stage = PatternStage::Rudimentary;
};

/// Unordered adjacency over the observables: a pair is linked iff no subset
/// of the observables separates it, decided by inducing-path search.
std::vector<std::pair<std::string, std::string>> embedded_skeleton(const Dag& g,
                                                                   Exec exec = Exec::Parallel);

/// The pattern with fewest arrowheads: an arrowhead lands at b on the link
/// a~b exactly when some third observable c is linked to b but not to a and
/// the paths inducing a~b and c~b can both end pointing at b.
EmbeddedPattern embedded_rudimentary_pattern(const Dag& g, Exec exec = Exec::Parallel);

/// Orientation closure under the embedded constraints; directed cycles are
/// counted over singly-directed links only.
EmbeddedPattern complete_embedded_pattern(const EmbeddedPattern& p);

/// Two embedded models are equivalent iff they have the same pattern over
/// their (shared) observables. Latent sets may differ arbitrarily.
bool embedded_equivalent(const Dag& g1, const Dag& g2);

/// A dag together with the latent node introduced for each bidirected link.
struct CanonicalModel {
    Dag dag;
    /// (endpoint, endpoint, latent name) per bidirected link.
    std::vector<std::tuple<std::string, std::string, std::string>> latent_witness;
};

/// Realizes a pattern as a concrete model: each a<->b becomes a <- h -> b
/// with a fresh latent h, and each undirected link is oriented by the first
/// acyclic completion that creates no new uncoupled collider. The result has
/// fewer than |observables|^2 nodes and the same pattern as the input.
CanonicalModel canonicalize(const HybridGraph& pattern);
CanonicalModel canonicalize(const EmbeddedPattern& pattern);

/// Upper bound 5^(n^2) on the number of distinct embedded-model equivalence
/// classes over n observables, as an exact decimal string.
std::string model_count_bound(int n_observables);

}  // namespace causal
