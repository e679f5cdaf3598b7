#pragma once

#include <vector>

#include "enttopo/correlations.hpp"
#include "enttopo/homology.hpp"
#include "enttopo/qstate.hpp"

namespace enttopo {

/**
 * Integrated Euler characteristic of a filtration, both ways: the alternating
 * sum of Betti-curve integrals (with the reduced beta_0) and the alternating
 * subset sum of marginal entropies. The two agree to 1e-8 on full-dimension
 * complexes.
 */
struct IecReport {
    double iec_integral = 0.0;
    double iec_closed_form = 0.0;
    double epsilon_max = 0.0;
    /// [0] holds the integral of the reduced beta_0, [k] the integral of
    /// beta_k; the IEC is their alternating sum.
    std::vector<double> per_dim_integrals;
};

/// Average distillable entanglement sandwiched by the bound theorem:
/// closed-form IEC / 2^n from below, the same plus epsilon_max / 2 from above.
struct BoundsReport {
    double lower = 0.0;
    double ade = 0.0;
    double upper = 0.0;
    double slack = 0.0; // upper - ade
};

/// Exact binomial coefficient in 64-bit integer arithmetic (n <= 30 is the
/// intended range; overflow-checked). C(n, k) = 0 for k < 0 or k > n.
long long binomial(int n, int k);

/**
 * sum_{i=0}^m (-1)^i C(n, i), by direct summation. Self-testing: the result
 * is checked against the closed form (-1)^m C(n-1, m) and a mismatch throws.
 */
long long alternating_binomial(int n, int m);

/**
 * Integral form of the IEC over the whole filtration range: the integral of
 * max(beta_0 - 1, 0) plus the alternating integrals of the higher Betti
 * curves, evaluated exactly as interval-length sums over the critical grid.
 * Throws if any integrand is still nonzero on the final unbounded interval
 * (possible only when max_dim was lowered below n - 1).
 */
double iec_integral(const FilteredComplex& complex);

/// The per-dimension integrals that iec_integral alternates over.
std::vector<double> iec_per_dim_integrals(const FilteredComplex& complex);

/// Closed form: sum over all subsets J of (-1)^(|J|-1) S(J) with S the chosen
/// entropy (the empty set contributes nothing).
double iec_closed_form(const PureState& state, EntropyKind kind);

/// Build the full-dimension complex for the functional and report both IEC
/// routes plus epsilon_max.
IecReport iec_report(const PureState& state, const CorrelationFunctional& functional);

/// Average distillable entanglement: 2^-n sum over all subsets J of S(J)
/// (von Neumann, bits), exact for pure states by the entropy-of-entanglement
/// equality.
double ade(const PureState& state);

/// The ADE value that characterizes AME states:
/// (n / 2^n) (2^(n-1) - C(n-1, floor(n/2))).
double ade_ame_closed_form(int n);

/**
 * Lower bound on the ADE of a k-uniform state, 2^-(n-1) sum_{i=1}^k C(n,i) i,
 * valid for 1 <= k < floor(n/2). Contrapositive use: an ADE below this value
 * rules out k-uniformity.
 */
double ade_kuniform_lower_bound(int n, int k);

/// Bound-theorem report with the von Neumann vertex-wise functional:
/// IEC/2^n <= ADE <= IEC/2^n + epsilon_max/2.
BoundsReport bounds_report(const PureState& state);

/**
 * Exact slack of the upper bound for an AME state of n qubits:
 *   n = 2k+1:        (2k+1) / 2^(2k+1) * C(2k, k)
 *   n = 2k, k even:  2k(k-1) / (2^2k (2k-1)) * C(2k, k)
 *   n = 2k, k odd:   2k^2   / (2^2k (2k-1)) * C(2k, k)
 * Purely combinatorial; meaningful whether or not an AME state exists at n.
 */
double ame_slack_closed_form(int n);

/// Closed-form von Neumann IEC of an AME state: 0 for odd n, and
/// (-1)^k (4k C(2k-2, k-2) - k C(2k, k)) for n = 2k. Routed through
/// alternating_binomial so the identity underlying it stays exercised.
double ame_iec_closed_form(int n);

/**
 * Birth value of the d-dimensional simplices of an AME state under the
 * 2-deformed functional:
 *   (d+1)/2 + 2^-(d+1)   - 1   when d+1 <= floor(n/2),
 *   (d+1)/2 + 2^-(n-d-1) - 1   otherwise.
 */
double ame_birth_time(int n, int d);

/**
 * Average of the vertex-wise total correlation of an AME state over all
 * proper subsets:
 *   n = 2k:    (k / 2^2k) C(2k, k) - k / 2^(2k-1)
 *   n = 2k+1:  ((2k+1) / 2^(2k+1)) C(2k, k) - k / 2^2k - 1 / 2^(2k+1)
 * Including the full vertex set would add exactly n / 2^n on top.
 */
double ame_avg_total_correlation(int n);

/// True iff the vertex-wise von Neumann correlation is below tol on every
/// nonempty subset of size <= floor(n/2).
bool ame_correlation_vanishes(const PureState& state, double tol);

} // namespace enttopo
