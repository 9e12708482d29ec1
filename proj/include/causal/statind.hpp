#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "causal/exec.hpp"
#include "causal/graph.hpp"
#include "causal/oracle.hpp"

namespace causal {

/// Categorical sample table. Values are stored column-major as codes into
/// each variable's category list; categories keep first-appearance order.
class Dataset {
public:
    struct Variable {
        std::string name;
        std::vector<std::string> categories;
    };

    Dataset(std::vector<Variable> variables, std::vector<std::vector<std::uint16_t>> columns);

    int variable_count() const { return static_cast<int>(variables_.size()); }
    std::size_t row_count() const { return rows_; }
    const Variable& variable(int i) const { return variables_[static_cast<std::size_t>(i)]; }
    int index_of(const std::string& name) const;
    const std::vector<std::uint16_t>& column(int i) const {
        return columns_[static_cast<std::size_t>(i)];
    }
    int cardinality(int i) const {
        return static_cast<int>(variables_[static_cast<std::size_t>(i)].categories.size());
    }

private:
    std::vector<Variable> variables_;
    std::vector<std::vector<std::uint16_t>> columns_;
    std::size_t rows_;
};

/// CSV with a header row of variable names; every later row is one sample.
/// Cells are treated as opaque category strings.
Dataset load_csv(std::istream& in);
Dataset load_csv_file(const std::string& path);
void save_csv(const Dataset& d, std::ostream& out);

/// Conditional probability tables for every node of a dag, keyed by node and
/// then by parent configuration (mixed-radix over the parent category codes,
/// first parent slowest).
struct Cpt {
    struct NodeTable {
        std::vector<std::string> categories;
        std::vector<int> parents;                     // node indices, graph order
        std::vector<std::vector<double>> rows;        // one distribution per parent config
    };
    std::vector<NodeTable> nodes;  // indexed like the dag
};

/// Parses the JSON CPT format (see README) and validates it against the
/// graph: every node covered, every parent configuration present, rows
/// normalized to 1 within 1e-9. Throws IncompleteCptError.
Cpt load_cpt_json(const Dag& g, std::istream& in);
Cpt load_cpt_json_file(const Dag& g, const std::string& path);

/// Draws n i.i.d. rows in topological order with a seeded mt19937_64;
/// identical inputs yield identical datasets. Latent nodes are sampled and
/// dropped from the emitted dataset.
Dataset forward_sample(const Dag& g, const Cpt& cpt, std::size_t n, std::uint64_t seed);

struct CrossEntropyResult {
    double value = 0.0;         // bits, nonnegative
    double covered_mass = 0.0;  // fraction of rows in strata meeting k_min
    std::size_t strata_used = 0;
    std::size_t strata_skipped = 0;
};

/// Conditional sample cross entropy H(a, b | S) in bits: the sum over
/// instantiations of P(a,b,S) * log2(P(a,b|S) / (P(a|S) P(b|S))). Strata
/// with fewer than k_min rows are excluded and reported through
/// covered_mass; empty cells contribute zero.
CrossEntropyResult cross_entropy(const Dataset& d, int a, int b, NodeSet given,
                                 std::size_t k_min = 5, Exec exec = Exec::Parallel);
CrossEntropyResult cross_entropy(const Dataset& d, const std::string& a, const std::string& b,
                                 const std::vector<std::string>& given, std::size_t k_min = 5,
                                 Exec exec = Exec::Parallel);

/// Dependence decision: independent iff the measure is at most epsilon bits
/// on the sufficiently supported strata.
bool reliable_independent(const Dataset& d, int a, int b, NodeSet given, std::size_t k_min,
                          double epsilon);

/// Oracle over a dataset answering reliable_independent, with a memo table
/// so repeated queries are answer-stable and cheap.
class DataOracle final : public IndependenceOracle {
public:
    DataOracle(std::shared_ptr<const Dataset> data, std::size_t k_min = 5, double epsilon = 0.02);

    std::size_t k_min() const { return k_min_; }
    double epsilon() const { return epsilon_; }

protected:
    bool query(int a, NodeSet given, int b) const override;

private:
    std::shared_ptr<const Dataset> data_;
    std::size_t k_min_;
    double epsilon_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, int, std::uint64_t>, bool> memo_;
};

}  // namespace causal
