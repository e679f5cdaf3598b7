#include "enttopo/correlations.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace enttopo {

CorrelationFunctional CorrelationFunctional::vn_total(double tolerance) {
    return CorrelationFunctional(EntropyKind::von_neumann, tolerance);
}

CorrelationFunctional CorrelationFunctional::tsallis2_total(double tolerance) {
    return CorrelationFunctional(EntropyKind::tsallis2, tolerance);
}

CorrelationFunctional CorrelationFunctional::from_name(const std::string& name) {
    if (name == "vn-total") return vn_total();
    if (name == "tsallis2-total") return tsallis2_total();
    throw std::invalid_argument("unknown functional '" + name +
                                "' (expected vn-total or tsallis2-total)");
}

const char* CorrelationFunctional::name() const {
    return entropy_ == EntropyKind::von_neumann ? "vn-total" : "tsallis2-total";
}

MarginalTable::MarginalTable(const PureState& state)
    : state_(&state),
      vn_(std::size_t{1} << state.n_qubits(), std::numeric_limits<double>::quiet_NaN()),
      t2_(std::size_t{1} << state.n_qubits(), std::numeric_limits<double>::quiet_NaN()) {}

double MarginalTable::entropy(EntropyKind kind, QubitSubset subset) const {
    if (subset.context_size() != state_->n_qubits()) {
        throw std::invalid_argument("MarginalTable: subset context does not match state");
    }
    return entropy(kind, subset.mask());
}

double MarginalTable::entropy(EntropyKind kind, std::uint32_t mask) const {
    std::vector<double>& cache = (kind == EntropyKind::von_neumann) ? vn_ : t2_;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const double hit = cache[mask];
        if (!std::isnan(hit)) return hit;
    }
    // Compute outside the lock; a concurrent duplicate lands on the same value.
    const DensityMatrix rho = partial_trace(*state_, QubitSubset(mask, state_->n_qubits()));
    const double value =
        (kind == EntropyKind::von_neumann) ? von_neumann_entropy(rho) : linear_entropy(rho);
    std::lock_guard<std::mutex> lock(mutex_);
    cache[mask] = value;
    return value;
}

namespace {

double correlation_from_table(const MarginalTable& table, EntropyKind kind,
                              std::uint32_t mask) {
    double sum = 0.0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        sum += table.entropy(kind, rest & (~rest + 1u));
    }
    return sum - table.entropy(kind, mask);
}

} // namespace

double total_correlation(const PureState& state, const std::vector<QubitSubset>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("total_correlation: parts must be nonempty");
    }
    std::uint32_t seen = 0;
    for (const QubitSubset& part : parts) {
        if (part.context_size() != state.n_qubits()) {
            throw std::invalid_argument("total_correlation: part context does not match state");
        }
        if ((seen & part.mask()) != 0) {
            throw std::invalid_argument("total_correlation: parts overlap");
        }
        seen |= part.mask();
    }
    MarginalTable table(state);
    double sum = 0.0;
    for (const QubitSubset& part : parts) {
        sum += table.entropy(EntropyKind::von_neumann, part.mask());
    }
    return sum - table.entropy(EntropyKind::von_neumann, seen);
}

double vertex_correlation(const PureState& state, QubitSubset subset) {
    if (subset.empty()) {
        throw std::invalid_argument("vertex_correlation: subset must be nonempty");
    }
    MarginalTable table(state);
    return correlation_from_table(table, EntropyKind::von_neumann, subset.mask());
}

double deformed_correlation_2(const PureState& state, QubitSubset subset) {
    if (subset.empty()) {
        throw std::invalid_argument("deformed_correlation_2: subset must be nonempty");
    }
    MarginalTable table(state);
    return correlation_from_table(table, EntropyKind::tsallis2, subset.mask());
}

double functional_value(const CorrelationFunctional& functional, const MarginalTable& table,
                        QubitSubset subset) {
    if (subset.empty()) {
        throw std::invalid_argument("functional_value: subset must be nonempty");
    }
    return correlation_from_table(table, functional.entropy(), subset.mask());
}

std::vector<std::pair<QubitSubset, QubitSubset>> check_downward_closure(
    const CorrelationFunctional& functional, const PureState& state, int max_size) {
    const int n = state.n_qubits();
    if (max_size > n) {
        throw std::invalid_argument("check_downward_closure: max_size exceeds qubit count");
    }
    MarginalTable table(state);
    const std::uint32_t full = QubitSubset::full_set(n).mask();

    std::vector<double> value(std::size_t{1} << n, 0.0);
    for (std::uint32_t k = 1; k <= full; ++k) {
        if (std::popcount(k) > max_size) continue;
        value[k] = correlation_from_table(table, functional.entropy(), k);
    }

    std::vector<std::pair<QubitSubset, QubitSubset>> violations;
    for (std::uint32_t k = 1; k <= full; ++k) {
        if (std::popcount(k) > max_size) continue;
        // Proper nonempty subsets of k.
        for (std::uint32_t j = (k - 1) & k; j != 0; j = (j - 1) & k) {
            if (value[j] > value[k] + functional.tolerance()) {
                violations.emplace_back(QubitSubset(j, n), QubitSubset(k, n));
            }
        }
    }
    return violations;
}

double epsilon_max(const PureState& state, const CorrelationFunctional& functional) {
    MarginalTable table(state);
    return correlation_from_table(table, functional.entropy(),
                                  QubitSubset::full_set(state.n_qubits()).mask());
}

} // namespace enttopo
