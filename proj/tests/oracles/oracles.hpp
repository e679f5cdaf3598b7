#pragma once

#include <cstdint>
#include <vector>

#include "enttopo/graphstates.hpp"
#include "enttopo/homology.hpp"
#include "enttopo/qstate.hpp"

// Brute-force reference implementations. They live in the test tree and stay
// deliberately naive: each one re-derives its answer from the definitions,
// sharing as little machinery as possible with the library code it checks.
// The CLI links them behind the --oracle flag so the cross-checks can be run
// on demand.
namespace enttopo::oracle {

/// |S_A| by enumerating every U subseteq A and testing supp(K_U) subseteq A
/// with per-vertex neighbor-parity counts.
std::uint64_t count_supported_stabilizers_brute(const Graph& g, QubitSubset a);

/// Betti numbers at epsilon from dense boolean boundary matrices built from
/// scratch and reduced by plain row elimination.
std::vector<int> betti_numbers_brute(const FilteredComplex& complex, double epsilon);

/// 2^-n sum of subset entropies by direct partial traces, no caching.
double ade_brute(const PureState& state);

/// Average vertex-wise total correlation by direct summation, with or
/// without the full vertex set.
double avg_vertex_correlation_brute(const PureState& state, bool include_full_set);

} // namespace enttopo::oracle
