#include "enttopo/graphstates.hpp"

#include "enttopo/correlations.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#ifndef ENTTOPO_DATA_DIR
#define ENTTOPO_DATA_DIR ""
#endif

namespace enttopo {

Graph::Graph(int n_vertices) : n_(n_vertices), adj_(static_cast<std::size_t>(n_vertices), 0) {
    if (n_vertices < 1 || n_vertices > kNumeric.max_qubits) {
        throw std::invalid_argument("Graph: vertex count outside [1, 12]");
    }
}

Graph Graph::from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n_vertices);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

namespace {

void check_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.n_vertices()) {
        throw std::invalid_argument(std::string(who) + ": vertex index out of range");
    }
}

} // namespace

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u, "add_edge");
    check_vertex(*this, v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u, "remove_edge");
    check_vertex(*this, v, "remove_edge");
    adj_[u] &= ~(1u << v);
    adj_[v] &= ~(1u << u);
}

void Graph::toggle_edge(int u, int v) {
    if (has_edge(u, v)) {
        remove_edge(u, v);
    } else {
        add_edge(u, v);
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(*this, u, "has_edge");
    check_vertex(*this, v, "has_edge");
    return (adj_[u] >> v) & 1u;
}

std::uint32_t Graph::neighborhood(int v) const {
    check_vertex(*this, v, "neighborhood");
    return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighborhood(v)); }

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint32_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    std::uint32_t reached = 1u;
    std::uint32_t frontier = 1u;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
            next |= adj_[std::countr_zero(f)];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == ((n_ >= 32) ? ~0u : ((1u << n_) - 1u));
}

bool Graph::has_isolated_vertex() const {
    for (std::uint32_t row : adj_) {
        if (row == 0) return true;
    }
    return n_ == 1; // a lone vertex counts as isolated
}

PureState graph_state_vector(const Graph& g) {
    const int n = g.n_vertices();
    const std::size_t dim = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<cplx> amps(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        // Count each edge inside x once (neighbors below v only).
        int edges_in_x = 0;
        for (std::uint32_t rest = static_cast<std::uint32_t>(x); rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            edges_in_x += std::popcount(g.neighborhood(v) & static_cast<std::uint32_t>(x) &
                                        ((1u << v) - 1u));
        }
        amps[x] = (edges_in_x & 1) ? -scale : scale;
    }
    return PureState(n, std::move(amps));
}

QubitSubset symmetric_neighborhood_difference(const Graph& g, QubitSubset u_set) {
    if (u_set.context_size() != g.n_vertices()) {
        throw std::invalid_argument("symmetric_neighborhood_difference: context mismatch");
    }
    // v has an odd number of neighbors in U iff bit v of XOR of the rows of U
    // is set (the F2 product of the adjacency matrix with U's indicator).
    std::uint32_t acc = 0;
    for (std::uint32_t rest = u_set.mask(); rest != 0; rest &= rest - 1) {
        acc ^= g.neighborhood(std::countr_zero(rest));
    }
    return QubitSubset(acc, g.n_vertices());
}

QubitSubset stabilizer_support(const Graph& g, QubitSubset u_set) {
    return u_set.united(symmetric_neighborhood_difference(g, u_set));
}

std::uint64_t count_supported_stabilizers(const Graph& g, QubitSubset a) {
    if (a.context_size() != g.n_vertices()) {
        throw std::invalid_argument("count_supported_stabilizers: context mismatch");
    }
    const std::vector<int> cols = a.members();
    const std::vector<int> rows = a.complement().members();
    F2Matrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (g.has_edge(rows[r], cols[c])) sub.set(static_cast<int>(r), static_cast<int>(c), true);
        }
    }
    const int kernel_dim = a.size() - sub.rank();
    return std::uint64_t{1} << kernel_dim;
}

double linear_entropy_from_support(const Graph& g, QubitSubset a) {
    const double count = static_cast<double>(count_supported_stabilizers(g, a));
    return 1.0 - count / std::pow(2.0, a.size());
}

PairMembership pair_membership_conditions(const Graph& g, int u, int v) {
    check_vertex(g, u, "pair_membership_conditions");
    check_vertex(g, v, "pair_membership_conditions");
    if (u == v) throw std::invalid_argument("pair_membership_conditions: u == v");
    if (g.has_isolated_vertex()) {
        throw std::invalid_argument("pair_membership_conditions: graph has an isolated vertex");
    }
    const std::uint32_t nu = g.neighborhood(u) & ~(1u << v);
    const std::uint32_t nv = g.neighborhood(v) & ~(1u << u);
    PairMembership m;
    m.ku_in = (nu == 0);
    m.kv_in = (nv == 0);
    m.kukv_in = (nu == nv);
    return m;
}

double pair_correlation_class(const Graph& g, int u, int v) {
    if (!g.is_connected()) {
        throw std::invalid_argument("pair_correlation_class: graph must be connected");
    }
    const PairMembership m = pair_membership_conditions(g, u, v);
    const int count = 1 + (m.ku_in ? 1 : 0) + (m.kv_in ? 1 : 0) + (m.kukv_in ? 1 : 0);
    return count / 4.0;
}

bool is_star(const Graph& g) {
    const int n = g.n_vertices();
    int center = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            center = v;
            break;
        }
    }
    if (center < 0) return false;
    for (int v = 0; v < n; ++v) {
        if (v != center && g.degree(v) != 1) return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (g.degree(v) != g.n_vertices() - 1) return false;
    }
    return true;
}

bool is_lu_ghz_graph(const Graph& g) {
    if (g.n_vertices() < 2) {
        throw std::invalid_argument("is_lu_ghz_graph: need at least 2 vertices");
    }
    if (!g.is_connected()) {
        throw std::invalid_argument("is_lu_ghz_graph: graph must be connected");
    }
    return is_star(g) || is_complete(g);
}

bool is_lu_ghz_state(const PureState& state, double tol) {
    const int n = state.n_qubits();
    MarginalTable table(state);
    const CorrelationFunctional c2 = CorrelationFunctional::tsallis2_total();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double value = functional_value(c2, table, QubitSubset::from_members({u, v}, n));
            if (std::abs(value - 0.5) > tol) return false;
        }
    }
    return true;
}

Graph local_complement(const Graph& g, int v) {
    check_vertex(g, v, "local_complement");
    Graph out = g;
    const std::vector<int> nbrs = QubitSubset(g.neighborhood(v), g.n_vertices()).members();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            out.toggle_edge(nbrs[i], nbrs[j]);
        }
    }
    return out;
}

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph wheel6_graph() {
    // Hub 0 joined to a 5-cycle on 1..5.
    Graph g(6);
    for (int v = 1; v <= 5; ++v) g.add_edge(0, v);
    for (int v = 1; v <= 5; ++v) g.add_edge(v, v == 5 ? 1 : v + 1);
    return g;
}

bool parse_sized_name(const std::string& name, const std::string& prefix, int& n_out) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
    const std::string digits = name.substr(prefix.size());
    for (char c : digits) {
        if (c < '0' || c > '9') return false;
    }
    n_out = std::stoi(digits);
    return true;
}

} // namespace

std::string bundled_data_dir() {
    if (const char* env = std::getenv("ENTTOPO_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ENTTOPO_DATA_DIR;
}

Graph builtin_graph(const std::string& name) {
    if (name == "pentagon5") return cycle_graph(5);
    if (name == "wheel6") return wheel6_graph();
    if (name == "kuniform8_1" || name == "kuniform8_2" || name == "kuniform8_3") {
        return load_graph_file(bundled_data_dir() + "/" + name + ".graph");
    }
    int n = 0;
    if (parse_sized_name(name, "star", n)) return star_graph(n);
    if (parse_sized_name(name, "complete", n)) return complete_graph(n);
    if (parse_sized_name(name, "path", n)) return path_graph(n);
    if (parse_sized_name(name, "cycle", n)) return cycle_graph(n);
    throw std::invalid_argument("unknown builtin graph '" + name + "'");
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            ls >> tag >> n;
            if (tag != "n" || !ls || n < 1) {
                throw std::runtime_error("graph file " + path + ": bad header (want 'n <count>')");
            }
            continue;
        }
        int u = 0, v = 0;
        ls >> u >> v;
        if (!ls) throw std::runtime_error("graph file " + path + ": bad edge line '" + line + "'");
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::runtime_error("graph file " + path + ": vertex out of range in '" + line + "'");
        }
        edges.emplace_back(u - 1, v - 1); // file is 1-indexed
    }
    if (n < 0) throw std::runtime_error("graph file " + path + ": missing header");
    return Graph::from_edges(n, edges);
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << "n " << g.n_vertices() << "\n";
    for (const auto& [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
    if (!out) throw std::runtime_error("failed writing graph file: " + path);
}

int k_uniformity(const PureState& state, double tol) {
    const int n = state.n_qubits();
    int best = 0;
    for (int k = 1; k <= n / 2; ++k) {
        const double target = std::pow(2.0, -k);
        bool all_mixed = true;
        const std::uint32_t full = QubitSubset::full_set(n).mask();
        for (std::uint32_t mask = 1; mask <= full && all_mixed; ++mask) {
            if (std::popcount(mask) != k) continue;
            const double purity = partial_trace(state, QubitSubset(mask, n)).purity();
            if (std::abs(purity - target) > tol) all_mixed = false;
        }
        if (!all_mixed) break;
        best = k;
    }
    return best;
}

bool is_ame(const PureState& state, double tol) {
    return k_uniformity(state, tol) == state.n_qubits() / 2;
}

std::vector<Graph> connected_graph_catalog(int n) {
    if (n < 1 || n > 7) {
        throw std::invalid_argument("connected_graph_catalog: exhaustive listing capped at n = 7");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::vector<Graph> out;
    const std::uint32_t total = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if ((mask >> e) & 1u) g.add_edge(pairs[e].first, pairs[e].second);
        }
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> random_connected_graphs(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) g.add_edge(u, v);
            }
        }
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

} // namespace enttopo
