#include "causal/statind.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace causal {

// ---------------------------------------------------------------------------
// Dataset

Dataset::Dataset(std::vector<Variable> variables, std::vector<std::vector<std::uint16_t>> columns)
    : variables_(std::move(variables)), columns_(std::move(columns)) {
    if (variables_.empty() || columns_.size() != variables_.size())
        throw Error("dataset variables and columns disagree");
    rows_ = columns_.front().size();
    if (rows_ < 1) throw Error("dataset needs at least one row");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].size() != rows_) throw Error("ragged dataset columns");
        for (std::uint16_t code : columns_[i])
            if (code >= variables_[i].categories.size())
                throw Error("category code out of range in column " + variables_[i].name);
    }
}

int Dataset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name) return static_cast<int>(i);
    throw UnknownVariableError("unknown variable '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

}  // namespace

Dataset load_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV input", 1);
    std::vector<Dataset::Variable> vars;
    for (const std::string& name : split_csv_line(line)) {
        if (name.empty()) throw ParseError("empty variable name in header", 1);
        vars.push_back({name, {}});
    }
    std::vector<std::unordered_map<std::string, std::uint16_t>> codes(vars.size());
    std::vector<std::vector<std::uint16_t>> columns(vars.size());

    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != vars.size())
            throw ParseError("expected " + std::to_string(vars.size()) + " cells, got " +
                                 std::to_string(cells.size()),
                             line_no);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto [it, inserted] =
                codes[i].try_emplace(cells[i], static_cast<std::uint16_t>(codes[i].size()));
            if (inserted) vars[i].categories.push_back(cells[i]);
            columns[i].push_back(it->second);
        }
    }
    if (columns.front().empty()) throw ParseError("CSV has no data rows", line_no);
    return Dataset(std::move(vars), std::move(columns));
}

Dataset load_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_csv(in);
}

void save_csv(const Dataset& d, std::ostream& out) {
    for (int i = 0; i < d.variable_count(); ++i) out << (i ? "," : "") << d.variable(i).name;
    out << '\n';
    for (std::size_t r = 0; r < d.row_count(); ++r) {
        for (int i = 0; i < d.variable_count(); ++i) {
            const auto& var = d.variable(i);
            out << (i ? "," : "") << var.categories[d.column(i)[r]];
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// CPT

namespace {

std::string config_key(const Cpt::NodeTable& t, const Dag& g,
                       const std::vector<std::uint16_t>& codes, const Cpt& cpt) {
    std::string key;
    for (std::size_t i = 0; i < t.parents.size(); ++i) {
        int p = t.parents[i];
        if (i) key += ',';
        key += g.name(p) + "=" +
               cpt.nodes[static_cast<std::size_t>(p)].categories[codes[i]];
    }
    return key;
}

}  // namespace

Cpt load_cpt_json(const Dag& g, std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("CPT file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw IncompleteCptError("CPT file must be a JSON object");

    Cpt cpt;
    cpt.nodes.resize(static_cast<std::size_t>(g.node_count()));

    // first pass: categories and parent lists
    for (int v = 0; v < g.node_count(); ++v) {
        const std::string& name = g.name(v);
        if (!doc.contains(name)) throw IncompleteCptError("no table for node '" + name + "'");
        const auto& entry = doc.at(name);
        auto& table = cpt.nodes[static_cast<std::size_t>(v)];
        if (!entry.contains("categories") || !entry.at("categories").is_array() ||
            entry.at("categories").empty())
            throw IncompleteCptError("node '" + name + "' needs a category list");
        for (const auto& c : entry.at("categories")) table.categories.push_back(c.get<std::string>());

        NodeSet expected = g.parents(v);
        if (entry.contains("parents"))
            for (const auto& p : entry.at("parents"))
                table.parents.push_back(g.index_of(p.get<std::string>()));
        NodeSet listed;
        for (int p : table.parents) listed.insert(p);
        if (listed != expected || static_cast<int>(table.parents.size()) != expected.size())
            throw IncompleteCptError("node '" + name + "' lists the wrong parent set");
    }

    // second pass: one normalized row per parent configuration
    for (int v = 0; v < g.node_count(); ++v) {
        auto& table = cpt.nodes[static_cast<std::size_t>(v)];
        const auto& entry = doc.at(g.name(v));
        if (!entry.contains("table") || !entry.at("table").is_object())
            throw IncompleteCptError("node '" + g.name(v) + "' needs a table object");
        const auto& rows = entry.at("table");

        std::size_t config_count = 1;
        for (int p : table.parents)
            config_count *= cpt.nodes[static_cast<std::size_t>(p)].categories.size();
        table.rows.resize(config_count);

        std::vector<std::uint16_t> codes(table.parents.size(), 0);
        for (std::size_t idx = 0; idx < config_count; ++idx) {
            const std::string key = config_key(table, g, codes, cpt);
            if (!rows.contains(key))
                throw IncompleteCptError("node '" + g.name(v) + "' is missing configuration '" +
                                         key + "'");
            std::vector<double> probs = rows.at(key).get<std::vector<double>>();
            if (probs.size() != table.categories.size())
                throw IncompleteCptError("node '" + g.name(v) + "', configuration '" + key +
                                         "': wrong number of probabilities");
            double sum = 0.0;
            for (double p : probs) {
                if (p < 0.0) throw IncompleteCptError("negative probability for '" + g.name(v) + "'");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-9)
                throw IncompleteCptError("node '" + g.name(v) + "', configuration '" + key +
                                         "': probabilities sum to " + std::to_string(sum));
            table.rows[idx] = std::move(probs);

            // advance mixed-radix counter, last-listed parent fastest
            for (std::size_t i = codes.size(); i-- > 0;) {
                int p = table.parents[i];
                if (++codes[i] <
                    cpt.nodes[static_cast<std::size_t>(p)].categories.size())
                    break;
                codes[i] = 0;
            }
        }
    }
    return cpt;
}

Cpt load_cpt_json_file(const Dag& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_cpt_json(g, in);
}

Dataset forward_sample(const Dag& g, const Cpt& cpt, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error("sample size must be positive");
    if (cpt.nodes.size() != static_cast<std::size_t>(g.node_count()))
        throw IncompleteCptError("CPT does not cover every node");

    const std::vector<int> order = g.topological_order();
    std::mt19937_64 rng(seed);
    // uniform in [0, 1) from the top 53 bits; spelled out so the stream is
    // reproducible from the documented generator alone
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<std::vector<std::uint16_t>> all(static_cast<std::size_t>(g.node_count()));
    for (auto& col : all) col.resize(n);

    std::vector<std::uint16_t> row(static_cast<std::size_t>(g.node_count()));
    for (std::size_t r = 0; r < n; ++r) {
        for (int v : order) {
            const auto& table = cpt.nodes[static_cast<std::size_t>(v)];
            std::size_t idx = 0;
            for (int p : table.parents) {
                idx = idx * cpt.nodes[static_cast<std::size_t>(p)].categories.size() +
                      row[static_cast<std::size_t>(p)];
            }
            const std::vector<double>& probs = table.rows[idx];
            const double u = uniform();
            double cum = 0.0;
            std::uint16_t pick = static_cast<std::uint16_t>(probs.size() - 1);
            for (std::size_t k = 0; k < probs.size(); ++k) {
                cum += probs[k];
                if (u < cum) {
                    pick = static_cast<std::uint16_t>(k);
                    break;
                }
            }
            row[static_cast<std::size_t>(v)] = pick;
            all[static_cast<std::size_t>(v)][r] = pick;
        }
    }

    std::vector<Dataset::Variable> vars;
    std::vector<std::vector<std::uint16_t>> columns;
    for (int v = 0; v < g.node_count(); ++v) {
        if (g.is_latent(v)) continue;
        vars.push_back({g.name(v), cpt.nodes[static_cast<std::size_t>(v)].categories});
        columns.push_back(std::move(all[static_cast<std::size_t>(v)]));
    }
    if (vars.empty()) throw NotObservableError("model has no observable nodes to emit");
    return Dataset(std::move(vars), std::move(columns));
}

// ---------------------------------------------------------------------------
// Cross entropy

namespace {

using StratumCounts = std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>;

void count_rows(const Dataset& d, int a, int b, const std::vector<int>& svars,
                const std::vector<std::uint64_t>& strides, std::size_t ka, std::size_t kb,
                std::size_t begin, std::size_t end, StratumCounts& into) {
    const auto& col_a = d.column(a);
    const auto& col_b = d.column(b);
    for (std::size_t r = begin; r < end; ++r) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < svars.size(); ++i)
            key += strides[i] * d.column(svars[i])[r];
        auto [it, inserted] = into.try_emplace(key);
        if (inserted) it->second.assign(ka * kb, 0);
        ++it->second[col_a[r] * kb + col_b[r]];
    }
}

}  // namespace

CrossEntropyResult cross_entropy(const Dataset& d, int a, int b, NodeSet given, std::size_t k_min,
                                 Exec exec) {
    const int n = d.variable_count();
    if (a < 0 || a >= n || b < 0 || b >= n) throw UnknownVariableError("variable out of range");
    if (!given.subset_of(NodeSet::full(n)))
        throw UnknownVariableError("conditioning set contains unknown variables");
    if (a == b || given.contains(a) || given.contains(b))
        throw OverlapError("query variables overlap the conditioning set");

    const std::vector<int> svars = given.to_vector();
    std::vector<std::uint64_t> strides(svars.size());
    std::uint64_t stride = 1;
    for (std::size_t i = svars.size(); i-- > 0;) {
        strides[i] = stride;
        const std::uint64_t card = static_cast<std::uint64_t>(d.cardinality(svars[i]));
        if (stride > ~std::uint64_t{0} / card)
            throw CapacityError("conditioning space too large to index");
        stride *= card;
    }

    const std::size_t ka = static_cast<std::size_t>(d.cardinality(a));
    const std::size_t kb = static_cast<std::size_t>(d.cardinality(b));
    const std::size_t rows = d.row_count();

    StratumCounts counts;
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
        const int threads = omp_get_max_threads();
#else
        const int threads = 1;
#endif
        std::vector<StratumCounts> partial(static_cast<std::size_t>(threads));
        const std::size_t chunk = (rows + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
#pragma omp parallel for schedule(static)
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(rows, begin + chunk);
            if (begin < end)
                count_rows(d, a, b, svars, strides, ka, kb, begin, end,
                           partial[static_cast<std::size_t>(t)]);
        }
        for (auto& p : partial)
            for (auto& [key, cells] : p) {
                auto [it, inserted] = counts.try_emplace(key);
                if (inserted) it->second.assign(ka * kb, 0);
                for (std::size_t i = 0; i < cells.size(); ++i) it->second[i] += cells[i];
            }
    } else {
        count_rows(d, a, b, svars, strides, ka, kb, 0, rows, counts);
    }

    // Deterministic accumulation: strata in ascending key order.
    std::vector<std::uint64_t> keys;
    keys.reserve(counts.size());
    for (const auto& [key, cells] : counts) keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    CrossEntropyResult result;
    const double dn = static_cast<double>(rows);
    std::size_t covered = 0;
    for (std::uint64_t key : keys) {
        const std::vector<std::uint32_t>& cells = counts.at(key);
        std::uint64_t total = 0;
        for (std::uint32_t c : cells) total += c;
        if (total < k_min) {
            ++result.strata_skipped;
            continue;
        }
        ++result.strata_used;
        covered += total;
        std::vector<std::uint64_t> ma(ka, 0), mb(kb, 0);
        for (std::size_t i = 0; i < ka; ++i)
            for (std::size_t j = 0; j < kb; ++j) {
                ma[i] += cells[i * kb + j];
                mb[j] += cells[i * kb + j];
            }
        for (std::size_t i = 0; i < ka; ++i)
            for (std::size_t j = 0; j < kb; ++j) {
                const std::uint32_t c = cells[i * kb + j];
                if (c == 0) continue;  // x log x -> 0
                const double ratio = (static_cast<double>(c) * static_cast<double>(total)) /
                                     (static_cast<double>(ma[i]) * static_cast<double>(mb[j]));
                result.value += (static_cast<double>(c) / dn) * std::log2(ratio);
            }
    }
    result.covered_mass = static_cast<double>(covered) / dn;
    if (result.value < 0.0 && result.value > -1e-9) result.value = 0.0;
    return result;
}

CrossEntropyResult cross_entropy(const Dataset& d, const std::string& a, const std::string& b,
                                 const std::vector<std::string>& given, std::size_t k_min,
                                 Exec exec) {
    NodeSet s;
    for (const auto& v : given) s.insert(d.index_of(v));
    return cross_entropy(d, d.index_of(a), d.index_of(b), s, k_min, exec);
}

bool reliable_independent(const Dataset& d, int a, int b, NodeSet given, std::size_t k_min,
                          double epsilon) {
    return cross_entropy(d, a, b, given, k_min, Exec::Serial).value <= epsilon;
}

// ---------------------------------------------------------------------------
// DataOracle

namespace {

std::vector<std::string> dataset_names(const Dataset& d) {
    std::vector<std::string> names;
    for (int i = 0; i < d.variable_count(); ++i) names.push_back(d.variable(i).name);
    return names;
}

}  // namespace

DataOracle::DataOracle(std::shared_ptr<const Dataset> data, std::size_t k_min, double epsilon)
    : IndependenceOracle(dataset_names(*data)),
      data_(std::move(data)),
      k_min_(k_min),
      epsilon_(epsilon) {}

bool DataOracle::query(int a, NodeSet given, int b) const {
    const auto key = std::make_tuple(a, b, given.bits());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const bool answer = reliable_independent(*data_, a, b, given, k_min_, epsilon_);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(key, answer).first->second;
}

}  // namespace causal
