#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "causal/exec.hpp"
#include "causal/graph.hpp"
#include "causal/oracle.hpp"
#include "causal/patterns.hpp"

namespace causal {

/// Separator found for each unordered variable pair during step 1; nullopt
/// marks an unseparable (hence linked) pair.
struct SeparatorTable {
    std::map<std::pair<int, int>, std::optional<NodeSet>> sep;

    const std::optional<NodeSet>& at(int a, int b) const {
        return sep.at(a < b ? std::pair{a, b} : std::pair{b, a});
    }
};

struct RecoveryOptions {
    bool complete = false;
    Exec exec = Exec::Parallel;
};

struct RecoveryResult {
    HybridGraph graph;
    SeparatorTable separators;
};

/// The three-step recovery over an arbitrary independence oracle. Step 1
/// links pairs with no separating subset (searched ascending by size,
/// lexicographic within size; the first separator found is recorded). Step 2
/// adds arrowheads at every common neighbor c of a non-adjacent pair with
/// dependence given S_ab + c; arrowheads accumulate, so a link can end up
/// bidirected. Step 3 optionally completes the pattern.
RecoveryResult recover(const IndependenceOracle& oracle, RecoveryOptions options = {});

/// Undirected graph linking pairs that are dependent given all remaining
/// variables; one oracle query per pair.
struct MarkovNet {
    std::vector<std::string> names;
    std::vector<NodeSet> adjacent;
};

MarkovNet markov_net(const IndependenceOracle& oracle);

/// All maximal cliques, each as a node set, in deterministic order.
std::vector<NodeSet> maximal_cliques(const MarkovNet& net);

struct LatentFreeResult {
    Pattern pattern;
    SeparatorTable separators;
};

/// Recovery for oracles promised to be latent-free dag-isomorphic: the step-1
/// search is confined to subsets of the Markov-network cliques containing
/// either endpoint. Throws BidirectedDetectedError when step 2 puts heads on
/// both ends of a link, which signals a broken promise.
LatentFreeResult recover_latent_free(const IndependenceOracle& oracle,
                                     RecoveryOptions options = {});

}  // namespace causal
