#pragma once

#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

#include "enttopo/qstate.hpp"

namespace enttopo {

/// The two entropies the correlation functionals are built on.
enum class EntropyKind { von_neumann, tsallis2 };

/**
 * Vertex-wise total correlation functional C(J) = sum_{v in J} S(v) - S(J),
 * with S either the von Neumann entropy or the 2-deformed (linear) entropy.
 *
 * Both choices are monotone under subset inclusion, which is what makes them
 * valid filtration functions; the closed enum keeps that guarantee testable.
 */
class CorrelationFunctional {
  public:
    static CorrelationFunctional vn_total(double tolerance = kNumeric.birth_tolerance);
    static CorrelationFunctional tsallis2_total(double tolerance = kNumeric.birth_tolerance);

    /// Parse "vn-total" / "tsallis2-total" (the CLI flag values).
    static CorrelationFunctional from_name(const std::string& name);

    EntropyKind entropy() const { return entropy_; }
    double tolerance() const { return tolerance_; }
    const char* name() const;

  private:
    CorrelationFunctional(EntropyKind entropy, double tolerance)
        : entropy_(entropy), tolerance_(tolerance) {}

    EntropyKind entropy_;
    double tolerance_;
};

/**
 * Lazy per-state table of marginal entropies keyed by subset mask. Subset
 * sweeps (filtrations, alternating sums, averages) hit the same marginals
 * repeatedly; each one is computed once and cached. Safe for concurrent use.
 *
 * The table borrows the state; keep the state alive while using it.
 */
class MarginalTable {
  public:
    explicit MarginalTable(const PureState& state);

    const PureState& state() const { return *state_; }
    int n_qubits() const { return state_->n_qubits(); }

    double entropy(EntropyKind kind, QubitSubset subset) const;
    double entropy(EntropyKind kind, std::uint32_t mask) const;

  private:
    const PureState* state_;
    mutable std::vector<double> vn_;
    mutable std::vector<double> t2_;
    mutable std::mutex mutex_;
};

/**
 * Total correlation sum_i S(J_i) - S(union J_i) of pairwise-disjoint parts
 * (von Neumann entropies, bits). Nonnegative up to numerical slack.
 */
double total_correlation(const PureState& state, const std::vector<QubitSubset>& parts);

/// C(J) with singleton parts: sum_{v in J} S(v) - S(J). Zero for |J| = 1.
double vertex_correlation(const PureState& state, QubitSubset subset);

/// The 2-deformed analogue: sum_{v in J} S2(v) - S2(J).
double deformed_correlation_2(const PureState& state, QubitSubset subset);

/// Functional evaluation against a marginal table (the filtration hot path).
double functional_value(const CorrelationFunctional& functional, const MarginalTable& table,
                        QubitSubset subset);

/**
 * Exhaustively check C(J) <= C(K) + tol for all J subset of K with |K| <=
 * max_size. Returns the violating (J, K) pairs; empty means the functional is
 * monotone on this state at this scale.
 */
std::vector<std::pair<QubitSubset, QubitSubset>> check_downward_closure(
    const CorrelationFunctional& functional, const PureState& state, int max_size);

/// Functional value on the full vertex set: the filtration value at which the
/// complex becomes a complete simplex.
double epsilon_max(const PureState& state, const CorrelationFunctional& functional);

} // namespace enttopo
