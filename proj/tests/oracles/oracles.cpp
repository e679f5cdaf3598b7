#include "oracles.hpp"

#include <bit>
#include <cmath>
#include <map>

namespace enttopo::oracle {

std::uint64_t count_supported_stabilizers_brute(const Graph& g, QubitSubset a) {
    const int n = g.n_vertices();
    const std::uint32_t a_mask = a.mask();
    std::uint64_t count = 0;
    // Walk every product of generators indexed inside A.
    std::uint32_t u = 0;
    while (true) {
        bool supported = true;
        // X factors sit on U itself; U must lie inside A (true by iteration).
        // Z factors survive on vertices adjacent to an odd number of U.
        for (int v = 0; v < n && supported; ++v) {
            if ((a_mask >> v) & 1u) continue; // inside A, anything goes
            int parity = 0;
            for (int w = 0; w < n; ++w) {
                if (((u >> w) & 1u) && g.has_edge(v, w)) parity ^= 1;
            }
            if (((u >> v) & 1u) || parity) supported = false;
        }
        if (supported) ++count;
        if (u == a_mask) break;
        u = (u - a_mask) & a_mask; // next subset of A
    }
    return count;
}

namespace {

int dense_rank(std::vector<std::vector<std::uint8_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r) {
            if (m[r][c]) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != static_cast<std::size_t>(rank) && m[r][c]) {
                for (std::size_t cc = 0; cc < cols; ++cc) {
                    m[r][cc] ^= m[static_cast<std::size_t>(rank)][cc];
                }
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<int> betti_numbers_brute(const FilteredComplex& complex, double epsilon) {
    const int top = complex.max_dim();
    std::vector<std::vector<std::uint32_t>> alive(static_cast<std::size_t>(top) + 1);
    for (const FilteredSimplex& s : complex.entries()) {
        if (s.birth <= epsilon + 1e-9) alive[static_cast<std::size_t>(s.dim)].push_back(s.mask);
    }

    std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        const auto& cols = alive[static_cast<std::size_t>(k)];
        const auto& rows = alive[static_cast<std::size_t>(k - 1)];
        if (cols.empty() || rows.empty()) continue;
        std::map<std::uint32_t, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
        std::vector<std::vector<std::uint8_t>> del(
            rows.size(), std::vector<std::uint8_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (int v = 0; v < complex.n_vertices(); ++v) {
                if ((cols[c] >> v) & 1u) {
                    del[row_of.at(cols[c] & ~(1u << v))][c] = 1;
                }
            }
        }
        rank[static_cast<std::size_t>(k)] = dense_rank(std::move(del));
    }

    std::vector<int> betti(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k) {
        betti[static_cast<std::size_t>(k)] = static_cast<int>(alive[static_cast<std::size_t>(k)].size()) -
                                             rank[static_cast<std::size_t>(k)] -
                                             rank[static_cast<std::size_t>(k) + 1];
    }
    return betti;
}

double ade_brute(const PureState& state) {
    const int n = state.n_qubits();
    const std::uint32_t full = (1u << n) - 1u;
    double sum = 0.0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        sum += von_neumann_entropy(partial_trace(state, QubitSubset(mask, n)));
    }
    return sum / std::pow(2.0, n);
}

double avg_vertex_correlation_brute(const PureState& state, bool include_full_set) {
    const int n = state.n_qubits();
    const std::uint32_t full = (1u << n) - 1u;
    double total = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!include_full_set && mask == full) continue;
        double singles = 0.0;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) {
                singles += von_neumann_entropy(partial_trace(state, QubitSubset::singleton(v, n)));
            }
        }
        total += singles - von_neumann_entropy(partial_trace(state, QubitSubset(mask, n)));
    }
    return total / std::pow(2.0, n);
}

} // namespace enttopo::oracle
