#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "enttopo/f2matrix.hpp"
#include "enttopo/qstate.hpp"

namespace enttopo {

/**
 * Simple undirected graph on up to 12 vertices; row v of the adjacency
 * structure is the neighborhood bitmask N(v). Symmetric and irreflexive by
 * construction.
 */
class Graph {
  public:
    explicit Graph(int n_vertices);
    static Graph from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges);

    int n_vertices() const { return n_; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::uint32_t neighborhood(int v) const;
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    bool is_connected() const;
    bool has_isolated_vertex() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    int n_;
    std::vector<std::uint32_t> adj_;
};

/// Which of K_u, K_v, K_u K_v are supported inside the vertex pair {u, v}.
struct PairMembership {
    bool ku_in = false;
    bool kv_in = false;
    bool kukv_in = false;
};

/**
 * Dense state vector of the graph state: Hadamards on every qubit followed by
 * a controlled-Z per edge. Basis amplitude of x is 2^(-n/2) * (-1)^(number of
 * edges with both endpoints set in x).
 */
PureState graph_state_vector(const Graph& g);

/// Vertices adjacent to an odd number of elements of U.
QubitSubset symmetric_neighborhood_difference(const Graph& g, QubitSubset u_set);

/// Support of the stabilizer K_U = prod_{u in U} K_u, i.e. U union Delta_N(U).
QubitSubset stabilizer_support(const Graph& g, QubitSubset u_set);

/**
 * |S_A|: the number of stabilizers supported inside A, counted as 2^(|A| - r)
 * where r is the F2 rank of the adjacency submatrix with rows A^C and columns
 * A (the kernel of U -> Delta_N(U) restricted outside A).
 */
std::uint64_t count_supported_stabilizers(const Graph& g, QubitSubset a);

/// Linear entropy of the marginal on A via the stabilizer count:
/// 1 - |S_A| / 2^|A|. Agrees with the dense computation to 1e-10.
double linear_entropy_from_support(const Graph& g, QubitSubset a);

/// Membership of K_u, K_v, K_u K_v in S_{u,v}. Requires u != v and a graph
/// with no isolated vertices.
PairMembership pair_membership_conditions(const Graph& g, int u, int v);

/**
 * 2-deformed correlation of a vertex pair of a connected graph state,
 * classified by neighborhood structure: |S_{u,v}| / 4, one of 1.0, 0.5, 0.25.
 */
double pair_correlation_class(const Graph& g, int u, int v);

bool is_star(const Graph& g);
bool is_complete(const Graph& g);

/**
 * True iff the graph is a star or a complete graph, i.e. iff its graph state
 * is locally unitary equivalent to the GHZ state. Requires a connected graph
 * on at least 2 vertices.
 */
bool is_lu_ghz_graph(const Graph& g);

/**
 * True iff every pair has 2-deformed correlation 0.5 within tol. For
 * stabilizer (graph) states this certifies LU equivalence to GHZ; for
 * arbitrary states it is only the necessary signature, not a proof.
 */
bool is_lu_ghz_state(const PureState& state, double tol);

/// Toggle all edges among the neighbors of v; leaves everything else alone.
Graph local_complement(const Graph& g, int v);

/**
 * Named example graphs: "pentagon5", "wheel6", "star<n>", "complete<n>",
 * "path<n>", "cycle<n>", "kuniform8_1", "kuniform8_2", "kuniform8_3". The
 * three 8-qubit k-uniform graphs are loaded from bundled edge-list files.
 */
Graph builtin_graph(const std::string& name);

/// Directory holding the bundled edge lists (ENTTOPO_DATA_DIR env overrides
/// the compiled-in default).
std::string bundled_data_dir();

/// Parse the edge-list text format: a header line "n <count>" followed by one
/// "u v" pair per line, 1-indexed.
Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

/**
 * Largest k <= floor(n/2) such that every marginal on j <= k qubits is
 * maximally mixed (purity 2^-j within tol); 0 when even a single qubit fails.
 */
int k_uniformity(const PureState& state, double tol);

/// k_uniformity == floor(n/2): maximally mixed across all bipartitions.
bool is_ame(const PureState& state, double tol);

/// Every connected labeled graph on n vertices (exhaustive; n <= 7 is sane).
std::vector<Graph> connected_graph_catalog(int n);

/// `count` random connected graphs on n vertices, deterministic per seed.
std::vector<Graph> random_connected_graphs(int n, int count, std::uint64_t seed);

} // namespace enttopo
