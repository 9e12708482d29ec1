#include "causal/oracle.hpp"

#include <algorithm>

#include "causal/separation.hpp"

namespace causal {

int IndependenceOracle::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownNodeError("unknown variable '" + name + "'");
    return static_cast<int>(it - vars_.begin());
}

bool IndependenceOracle::holds(int a, NodeSet given, int b) const {
    if (a < 0 || a >= variable_count() || b < 0 || b >= variable_count())
        throw UnknownNodeError("query endpoint out of range");
    if (!given.subset_of(NodeSet::full(variable_count())))
        throw UnknownNodeError("conditioning set contains unknown variables");
    if (a == b) throw OverlapError("query endpoints coincide");
    if (given.contains(a) || given.contains(b))
        throw OverlapError("conditioning set overlaps a query endpoint");
    if (a > b) std::swap(a, b);  // answers are symmetric by contract
    return query(a, given, b);
}

std::vector<std::string> GraphicalOracle::observable_names(const Dag& g) {
    std::vector<std::string> names;
    for (int v = 0; v < g.node_count(); ++v)
        if (!g.is_latent(v)) names.push_back(g.name(v));
    return names;
}

GraphicalOracle::GraphicalOracle(Dag g)
    : IndependenceOracle(observable_names(g)), g_(std::move(g)) {
    for (int v = 0; v < g_.node_count(); ++v)
        if (!g_.is_latent(v)) to_graph_.push_back(v);
}

bool GraphicalOracle::query(int a, NodeSet given, int b) const {
    NodeSet s;
    for (int v : given) s.insert(to_graph_[static_cast<std::size_t>(v)]);
    return d_separated(g_, to_graph_[static_cast<std::size_t>(a)],
                       to_graph_[static_cast<std::size_t>(b)], s);
}

CountingOracle::CountingOracle(const IndependenceOracle& inner)
    : IndependenceOracle(inner.variables()), inner_(inner), count_(0) {}

bool CountingOracle::query(int a, NodeSet given, int b) const {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_.holds(a, given, b);
}

}  // namespace causal
