#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <vector>

#include "causal/graph.hpp"

namespace causal {

/// Abstract independence query interface over a declared variable set.
/// Answers are symmetric in the endpoints, deterministic and side-effect
/// free; implementations must be safe for concurrent queries.
class IndependenceOracle {
public:
    virtual ~IndependenceOracle() = default;

    const std::vector<std::string>& variables() const { return vars_; }
    int variable_count() const { return static_cast<int>(vars_.size()); }
    int index_of(const std::string& name) const;

    /// Whether I(a, given, b) holds.
    bool holds(int a, NodeSet given, int b) const;

protected:
    explicit IndependenceOracle(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    virtual bool query(int a, NodeSet given, int b) const = 0;

private:
    std::vector<std::string> vars_;
};

/// Ground-truth oracle backed by d-separation in a dag. Variables are the
/// observables of the graph; queries never range over latents.
class GraphicalOracle final : public IndependenceOracle {
public:
    explicit GraphicalOracle(Dag g);

    const Dag& graph() const { return g_; }

protected:
    bool query(int a, NodeSet given, int b) const override;

private:
    static std::vector<std::string> observable_names(const Dag& g);

    Dag g_;
    std::vector<int> to_graph_;  // oracle index -> graph node index
};

/// Pass-through wrapper counting queries; used for the complexity
/// instrumentation of the recovery algorithms.
class CountingOracle final : public IndependenceOracle {
public:
    explicit CountingOracle(const IndependenceOracle& inner);

    std::size_t count() const { return count_.load(); }
    void reset() { count_.store(0); }

protected:
    bool query(int a, NodeSet given, int b) const override;

private:
    const IndependenceOracle& inner_;
    mutable std::atomic<std::size_t> count_;
};

}  // namespace causal
