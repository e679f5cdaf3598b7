#include "enttopo/invariants.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace enttopo {

long long binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        const long long next = result * (n - k + i);
        if (next / (n - k + i) != result) {
            throw std::overflow_error("binomial: 64-bit overflow");
        }
        result = next / i; // exact: result holds C(n-k+i, i) after each step
    }
    return result;
}

long long alternating_binomial(int n, int m) {
    if (n < 0 || m < 0 || m > n) {
        throw std::invalid_argument("alternating_binomial: need 0 <= m <= n");
    }
    long long sum = 0;
    for (int i = 0; i <= m; ++i) {
        sum += (i % 2 == 0 ? 1 : -1) * binomial(n, i);
    }
    const long long sign = (m % 2 == 0) ? 1 : -1;
    const long long expected = sign * (m == 0 ? 1 : binomial(n - 1, m));
    if (sum != expected) {
        throw std::logic_error("alternating_binomial: identity check failed at n=" +
                               std::to_string(n) + ", m=" + std::to_string(m));
    }
    return sum;
}

std::vector<double> iec_per_dim_integrals(const FilteredComplex& complex) {
    const std::vector<BettiCurve> curves = betti_curves(complex);
    const std::vector<double>& grid = complex.critical_values();
    std::vector<double> integrals(curves.size(), 0.0);
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const BettiCurve& curve = curves[k];
        // The reduced curve for dimension 0 drops the everlasting component.
        auto integrand = [&](int value) {
            return (k == 0) ? std::max(value - 1, 0) : value;
        };
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            integrals[k] += integrand(curve.values[i]) * (grid[i + 1] - grid[i]);
        }
        if (!grid.empty() && integrand(curve.values.back()) != 0) {
            throw std::runtime_error(
                "iec_integral: Betti curve of dimension " + std::to_string(k) +
                " is nonzero past the last critical value; the integral diverges "
                "(was max_dim lowered below n - 1?)");
        }
    }
    return integrals;
}

double iec_integral(const FilteredComplex& complex) {
    const std::vector<double> integrals = iec_per_dim_integrals(complex);
    double total = 0.0;
    double sign = 1.0;
    for (double v : integrals) {
        total += sign * v;
        sign = -sign;
    }
    return total;
}

double iec_closed_form(const PureState& state, EntropyKind kind) {
    MarginalTable table(state);
    const std::uint32_t full = QubitSubset::full_set(state.n_qubits()).mask();
    double sum = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const double s = table.entropy(kind, mask);
        sum += (std::popcount(mask) % 2 == 1) ? s : -s;
    }
    return sum;
}

IecReport iec_report(const PureState& state, const CorrelationFunctional& functional) {
    const FilteredComplex complex =
        build_filtration(state, functional, state.n_qubits() - 1);
    IecReport report;
    report.per_dim_integrals = iec_per_dim_integrals(complex);
    double sign = 1.0;
    for (double v : report.per_dim_integrals) {
        report.iec_integral += sign * v;
        sign = -sign;
    }
    report.iec_closed_form = iec_closed_form(state, functional.entropy());
    report.epsilon_max = epsilon_max(state, functional);
    return report;
}

double ade(const PureState& state) {
    MarginalTable table(state);
    const std::uint32_t full = QubitSubset::full_set(state.n_qubits()).mask();
    double sum = 0.0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        sum += table.entropy(EntropyKind::von_neumann, mask);
    }
    return sum / std::pow(2.0, state.n_qubits());
}

double ade_ame_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("ade_ame_closed_form: need n >= 2");
    const double num = static_cast<double>(n) *
                       (std::pow(2.0, n - 1) - static_cast<double>(binomial(n - 1, n / 2)));
    return num / std::pow(2.0, n);
}

double ade_kuniform_lower_bound(int n, int k) {
    if (n < 2) throw std::invalid_argument("ade_kuniform_lower_bound: need n >= 2");
    if (k < 1 || k >= n / 2) {
        throw std::domain_error("ade_kuniform_lower_bound: requires 1 <= k < floor(n/2)");
    }
    long long weighted = 0;
    for (int i = 1; i <= k; ++i) weighted += binomial(n, i) * i;
    return static_cast<double>(weighted) / std::pow(2.0, n - 1);
}

BoundsReport bounds_report(const PureState& state) {
    const int n = state.n_qubits();
    MarginalTable table(state);
    const std::uint32_t full = QubitSubset::full_set(n).mask();

    double alternating = 0.0;
    double plain = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const double s = table.entropy(EntropyKind::von_neumann, mask);
        plain += s;
        alternating += (std::popcount(mask) % 2 == 1) ? s : -s;
    }
    double singles = 0.0;
    for (int v = 0; v < n; ++v) {
        singles += table.entropy(EntropyKind::von_neumann, std::uint32_t{1} << v);
    }
    const double eps_max = singles - table.entropy(EntropyKind::von_neumann, full);

    BoundsReport report;
    report.lower = alternating / std::pow(2.0, n);
    report.ade = plain / std::pow(2.0, n);
    report.upper = report.lower + 0.5 * eps_max;
    report.slack = report.upper - report.ade;
    return report;
}

double ame_slack_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("ame_slack_closed_form: need n >= 2");
    if (n % 2 == 1) {
        const int k = n / 2;
        return static_cast<double>(n) * static_cast<double>(binomial(2 * k, k)) /
               std::pow(2.0, n);
    }
    const int k = n / 2;
    const double central = static_cast<double>(binomial(2 * k, k));
    const double denom = std::pow(2.0, 2 * k) * (2 * k - 1);
    if (k % 2 == 0) {
        return 2.0 * k * (k - 1) * central / denom;
    }
    return 2.0 * k * k * central / denom;
}

double ame_iec_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("ame_iec_closed_form: need n >= 2");
    if (n % 2 == 1) return 0.0;
    const int k = n / 2;
    // 4k * sum_{j=0}^{k-2} (-1)^j C(2k-1, j)  -  (-1)^k k C(2k, k); the
    // alternating sum collapses to (-1)^k C(2k-2, k-2).
    const long long head = (k >= 2) ? 4LL * k * alternating_binomial(2 * k - 1, k - 2) : 0;
    const long long sign = (k % 2 == 0) ? 1 : -1;
    return static_cast<double>(head - sign * k * binomial(2 * k, k));
}

double ame_birth_time(int n, int d) {
    if (d < 0 || d > n - 2) {
        throw std::invalid_argument("ame_birth_time: need 0 <= d <= n - 2");
    }
    const int cardinality = d + 1;
    const int exponent = (cardinality <= n / 2) ? cardinality : (n - cardinality);
    return cardinality / 2.0 + std::pow(2.0, -exponent) - 1.0;
}

double ame_avg_total_correlation(int n) {
    if (n < 2) throw std::invalid_argument("ame_avg_total_correlation: need n >= 2");
    const int k = n / 2;
    const double central = static_cast<double>(binomial(2 * k, k));
    if (n % 2 == 0) {
        return k * central / std::pow(2.0, 2 * k) - k / std::pow(2.0, 2 * k - 1);
    }
    return (2 * k + 1) * central / std::pow(2.0, 2 * k + 1) - k / std::pow(2.0, 2 * k) -
           1.0 / std::pow(2.0, 2 * k + 1);
}

bool ame_correlation_vanishes(const PureState& state, double tol) {
    const int n = state.n_qubits();
    MarginalTable table(state);
    const std::uint32_t full = QubitSubset::full_set(n).mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int size = std::popcount(mask);
        if (size > n / 2) continue;
        double singles = 0.0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            singles += table.entropy(EntropyKind::von_neumann, rest & (~rest + 1u));
        }
        const double correlation = singles - table.entropy(EntropyKind::von_neumann, mask);
        if (std::abs(correlation) >= tol) return false;
    }
    return true;
}

} // namespace enttopo
