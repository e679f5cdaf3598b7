#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "enttopo/correlations.hpp"
#include "enttopo/f2matrix.hpp"
#include "enttopo/qstate.hpp"

namespace enttopo {

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

/// One face of the entanglement complex: the qubit subset it spans and the
/// filtration value at which it enters.
struct FilteredSimplex {
    std::uint32_t mask = 0;
    int dim = 0;
    double birth = 0.0;
};

/**
 * A filtered simplicial complex on the qubit vertices: every subset of size
 * <= max_dim + 1 paired with its birth value, sorted by (birth, dim, mask).
 * That tie order puts faces before cofaces, which is what the persistence
 * reduction needs; the lexicographic tail makes it reproducible.
 *
 * Invariants enforced at construction: every vertex present with birth 0,
 * closed under faces, and face-monotone (no face born after a coface, up to
 * 1e-12 noise). Births within kNumeric.birth_tolerance of each other have
 * been snapped to a single critical value.
 */
class FilteredComplex {
  public:
    FilteredComplex(int n_vertices, int max_dim, std::vector<FilteredSimplex> entries);

    int n_vertices() const { return n_; }
    int max_dim() const { return max_dim_; }
    const std::vector<FilteredSimplex>& entries() const { return entries_; }

    /// Distinct birth values, ascending. Consecutive values differ by more
    /// than the snap tolerance.
    const std::vector<double>& critical_values() const { return criticals_; }

    bool contains(std::uint32_t mask) const;
    double birth_of(std::uint32_t mask) const;

    /// A face is alive at epsilon iff birth <= epsilon + snap tolerance
    /// (entry at the birth value is inclusive).
    bool alive(const FilteredSimplex& s, double epsilon) const;

  private:
    int n_;
    int max_dim_;
    std::vector<FilteredSimplex> entries_;
    std::vector<double> criticals_;
    std::vector<double> birth_by_mask_;
};

/// Piecewise-constant Betti function of one dimension over the critical grid.
/// values[i] holds beta_k on [breakpoints[i], breakpoints[i+1]); the last
/// value extends to infinity. Right-continuous: a face counts at its birth.
struct BettiCurve {
    int dim = 0;
    std::vector<double> breakpoints;
    std::vector<int> values;

    int value_at(double epsilon) const;
};

struct BarInterval {
    int dim = 0;
    double birth = 0.0;
    double death = kInfiniteDeath;

    bool essential() const { return death == kInfiniteDeath; }
};

struct Barcode {
    std::vector<BarInterval> intervals;

    /// Number of dim-k intervals [birth, death) containing epsilon.
    int count_at(int dim, double epsilon) const;
};

/**
 * Build the sublevel filtration of the correlation functional: every subset J
 * with 2 <= |J| <= max_dim + 1 is born at max(C(J), births of its facets)
 * (the max only absorbs numerical noise; closure holds analytically), and
 * every vertex at 0. Births within 1e-9 of the raw functional values.
 */
FilteredComplex build_filtration(const PureState& state, const CorrelationFunctional& functional,
                                 int max_dim);

/**
 * F2 boundary operator at filtration value epsilon: columns are the alive
 * k-simplices, rows the alive (k-1)-simplices, entries mark facet relations.
 */
F2Matrix boundary_matrix(const FilteredComplex& complex, int k, double epsilon);

/// beta_0 .. beta_maxdim at epsilon via F2 rank-nullity of the boundary
/// operators (beta_0 uses the zero map d_0).
std::vector<int> betti_numbers(const FilteredComplex& complex, double epsilon);

/// Betti curves over the critical grid, one per dimension, derived from the
/// persistence intervals.
std::vector<BettiCurve> betti_curves(const FilteredComplex& complex);

/// Persistence barcode by the standard column reduction over F2. Interval
/// counts reproduce betti_numbers at every value; essential classes get an
/// infinite death.
Barcode persistence_pairs(const FilteredComplex& complex);

/// Alternating sum of Betti numbers at epsilon.
long long euler_characteristic(const FilteredComplex& complex, double epsilon);

/// Number of alive k-simplices at epsilon for k = 0..max_dim; the alternating
/// sum of these equals the Euler characteristic.
std::vector<long long> face_counts(const FilteredComplex& complex, double epsilon);

} // namespace enttopo
