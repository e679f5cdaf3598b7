#include "enttopo/homology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace enttopo {

namespace {

bool entry_order(const FilteredSimplex& a, const FilteredSimplex& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.mask < b.mask;
}

} // namespace

FilteredComplex::FilteredComplex(int n_vertices, int max_dim,
                                 std::vector<FilteredSimplex> entries)
    : n_(n_vertices), max_dim_(max_dim), entries_(std::move(entries)),
      birth_by_mask_(std::size_t{1} << n_vertices,
                     std::numeric_limits<double>::quiet_NaN()) {
    if (n_vertices < 1 || n_vertices > kNumeric.max_qubits) {
        throw std::invalid_argument("FilteredComplex: vertex count outside [1, 12]");
    }
    if (max_dim < 0 || max_dim > n_vertices - 1) {
        throw std::invalid_argument("FilteredComplex: max_dim outside [0, n-1]");
    }
    std::sort(entries_.begin(), entries_.end(), entry_order);

    for (const FilteredSimplex& s : entries_) {
        if (s.mask == 0 || std::popcount(s.mask) != s.dim + 1 || s.dim > max_dim_) {
            throw std::invalid_argument("FilteredComplex: malformed simplex entry");
        }
        if (!std::isnan(birth_by_mask_[s.mask])) {
            throw std::invalid_argument("FilteredComplex: duplicate simplex");
        }
        birth_by_mask_[s.mask] = s.birth;
    }
    for (int v = 0; v < n_; ++v) {
        const double b = birth_by_mask_[std::uint32_t{1} << v];
        if (std::isnan(b) || b != 0.0) {
            throw std::invalid_argument("FilteredComplex: every vertex must be present at birth 0");
        }
    }
    for (const FilteredSimplex& s : entries_) {
        if (s.dim == 0) continue;
        for (std::uint32_t rest = s.mask; rest != 0; rest &= rest - 1) {
            const std::uint32_t facet = s.mask & ~(rest & (~rest + 1u));
            const double fb = birth_by_mask_[facet];
            if (std::isnan(fb)) {
                throw std::invalid_argument("FilteredComplex: not closed under faces");
            }
            if (s.birth < fb - 1e-12) {
                throw std::invalid_argument("FilteredComplex: face born after its coface");
            }
        }
    }

    criticals_.reserve(entries_.size());
    for (const FilteredSimplex& s : entries_) {
        if (criticals_.empty() || s.birth > criticals_.back()) criticals_.push_back(s.birth);
    }
}

bool FilteredComplex::contains(std::uint32_t mask) const {
    return mask < birth_by_mask_.size() && !std::isnan(birth_by_mask_[mask]);
}

double FilteredComplex::birth_of(std::uint32_t mask) const {
    if (!contains(mask)) {
        throw std::invalid_argument("FilteredComplex: simplex not in complex");
    }
    return birth_by_mask_[mask];
}

bool FilteredComplex::alive(const FilteredSimplex& s, double epsilon) const {
    return s.birth <= epsilon + kNumeric.birth_tolerance;
}

int BettiCurve::value_at(double epsilon) const {
    if (breakpoints.empty() || epsilon < breakpoints.front() - kNumeric.birth_tolerance) {
        return 0;
    }
    // Last breakpoint <= epsilon (with the same snap slack the complex uses).
    std::size_t i = breakpoints.size();
    while (i > 0 && breakpoints[i - 1] > epsilon + kNumeric.birth_tolerance) --i;
    return (i == 0) ? 0 : values[i - 1];
}

int Barcode::count_at(int dim, double epsilon) const {
    int count = 0;
    for (const BarInterval& bar : intervals) {
        if (bar.dim != dim) continue;
        if (bar.birth <= epsilon + kNumeric.birth_tolerance &&
            epsilon + kNumeric.birth_tolerance < bar.death) {
            ++count;
        }
    }
    return count;
}

FilteredComplex build_filtration(const PureState& state, const CorrelationFunctional& functional,
                                 int max_dim) {
    const int n = state.n_qubits();
    if (max_dim < 0 || max_dim > n - 1) {
        throw std::invalid_argument("build_filtration: max_dim outside [0, n-1]");
    }
    MarginalTable table(state);
    const std::uint32_t full = QubitSubset::full_set(n).mask();

    std::vector<double> birth(std::size_t{1} << n, 0.0);
    std::vector<std::uint32_t> masks_by_size;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) <= max_dim + 1) masks_by_size.push_back(mask);
    }
    std::sort(masks_by_size.begin(), masks_by_size.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  const int pa = std::popcount(a), pb = std::popcount(b);
                  return pa != pb ? pa < pb : a < b;
              });

    for (std::uint32_t mask : masks_by_size) {
        if (std::popcount(mask) == 1) {
            birth[mask] = 0.0;
            continue;
        }
        double b = functional_value(functional, table, QubitSubset(mask, n));
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const std::uint32_t facet = mask & ~(rest & (~rest + 1u));
            b = std::max(b, birth[facet]); // absorbs numerical noise only
        }
        birth[mask] = b;
    }

    // Snap births within the tolerance onto one representative so that
    // analytically equal correlations land on a single critical value.
    std::vector<double> sorted_births;
    sorted_births.reserve(masks_by_size.size());
    for (std::uint32_t mask : masks_by_size) sorted_births.push_back(birth[mask]);
    std::sort(sorted_births.begin(), sorted_births.end());
    std::vector<double> reps;
    for (double b : sorted_births) {
        if (reps.empty() || b > reps.back() + kNumeric.birth_tolerance) reps.push_back(b);
    }
    auto snap = [&reps](double b) {
        auto it = std::upper_bound(reps.begin(), reps.end(), b);
        return *(it - 1); // largest representative <= b; within tolerance of b
    };

    std::vector<FilteredSimplex> entries;
    entries.reserve(masks_by_size.size());
    for (std::uint32_t mask : masks_by_size) {
        entries.push_back({mask, std::popcount(mask) - 1, snap(birth[mask])});
    }
    return FilteredComplex(n, max_dim, std::move(entries));
}

namespace {

std::vector<const FilteredSimplex*> alive_of_dim(const FilteredComplex& complex, int dim,
                                                 double epsilon) {
    std::vector<const FilteredSimplex*> out;
    for (const FilteredSimplex& s : complex.entries()) {
        if (s.dim == dim && complex.alive(s, epsilon)) out.push_back(&s);
    }
    return out;
}

} // namespace

F2Matrix boundary_matrix(const FilteredComplex& complex, int k, double epsilon) {
    if (k < 1 || k > complex.max_dim()) {
        throw std::invalid_argument("boundary_matrix: k outside [1, max_dim]");
    }
    const auto cols = alive_of_dim(complex, k, epsilon);
    const auto rows = alive_of_dim(complex, k - 1, epsilon);
    std::vector<int> row_index(std::size_t{1} << complex.n_vertices(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]->mask] = static_cast<int>(r);

    F2Matrix del(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::uint32_t mask = cols[c]->mask;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const std::uint32_t facet = mask & ~(rest & (~rest + 1u));
            const int r = row_index[facet];
            if (r < 0) {
                throw std::logic_error("boundary_matrix: facet missing from the alive complex");
            }
            del.set(r, static_cast<int>(c), true);
        }
    }
    return del;
}

std::vector<int> betti_numbers(const FilteredComplex& complex, double epsilon) {
    const int top = complex.max_dim();
    std::vector<int> alive_count(top + 1, 0);
    for (const FilteredSimplex& s : complex.entries()) {
        if (complex.alive(s, epsilon)) ++alive_count[s.dim];
    }
    std::vector<int> rank(top + 2, 0); // rank[k] = rank of d_k; d_0 = 0, d_{top+1} = 0
    for (int k = 1; k <= top; ++k) {
        if (alive_count[k] > 0) rank[k] = boundary_matrix(complex, k, epsilon).rank();
    }
    std::vector<int> betti(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        betti[k] = alive_count[k] - rank[k] - rank[k + 1];
    }
    return betti;
}

Barcode persistence_pairs(const FilteredComplex& complex) {
    const std::vector<FilteredSimplex>& simplices = complex.entries();
    const std::size_t m = simplices.size();
    std::vector<int> position(std::size_t{1} << complex.n_vertices(), -1);
    for (std::size_t i = 0; i < m; ++i) position[simplices[i].mask] = static_cast<int>(i);

    // Column reduction: repeatedly cancel the lowest 1 of each boundary
    // column against the stored column owning that pivot row.
    std::vector<int> pivot_owner(m, -1);
    std::vector<std::vector<int>> stored(m);
    std::vector<int> killed_by(m, -1);

    std::vector<int> col, merged;
    for (std::size_t j = 0; j < m; ++j) {
        col.clear();
        const FilteredSimplex& s = simplices[j];
        if (s.dim > 0) {
            for (std::uint32_t rest = s.mask; rest != 0; rest &= rest - 1) {
                col.push_back(position[s.mask & ~(rest & (~rest + 1u))]);
            }
            std::sort(col.begin(), col.end());
        }
        while (!col.empty() && pivot_owner[static_cast<std::size_t>(col.back())] != -1) {
            const std::vector<int>& other =
                stored[static_cast<std::size_t>(pivot_owner[static_cast<std::size_t>(col.back())])];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(merged));
            col.swap(merged);
        }
        if (!col.empty()) {
            const int low = col.back();
            pivot_owner[static_cast<std::size_t>(low)] = static_cast<int>(j);
            killed_by[static_cast<std::size_t>(low)] = static_cast<int>(j);
            stored[j] = col;
        }
    }

    Barcode barcode;
    for (std::size_t i = 0; i < m; ++i) {
        const bool creator = stored[i].empty(); // empty (reduced-to-zero or vertex) column
        if (!creator) continue;
        const FilteredSimplex& born = simplices[i];
        if (killed_by[i] == -1) {
            barcode.intervals.push_back({born.dim, born.birth, kInfiniteDeath});
        } else {
            const double death = simplices[static_cast<std::size_t>(killed_by[i])].birth;
            if (death > born.birth) {
                barcode.intervals.push_back({born.dim, born.birth, death});
            }
        }
    }
    return barcode;
}

std::vector<BettiCurve> betti_curves(const FilteredComplex& complex) {
    const Barcode barcode = persistence_pairs(complex);
    const std::vector<double>& grid = complex.critical_values();
    std::vector<BettiCurve> curves(static_cast<std::size_t>(complex.max_dim()) + 1);
    for (int k = 0; k <= complex.max_dim(); ++k) {
        BettiCurve& curve = curves[static_cast<std::size_t>(k)];
        curve.dim = k;
        curve.breakpoints = grid;
        curve.values.reserve(grid.size());
        for (double eps : grid) curve.values.push_back(barcode.count_at(k, eps));
    }
    return curves;
}

long long euler_characteristic(const FilteredComplex& complex, double epsilon) {
    long long chi = 0;
    int sign = 1;
    for (int b : betti_numbers(complex, epsilon)) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

std::vector<long long> face_counts(const FilteredComplex& complex, double epsilon) {
    std::vector<long long> counts(static_cast<std::size_t>(complex.max_dim()) + 1, 0);
    for (const FilteredSimplex& s : complex.entries()) {
        if (complex.alive(s, epsilon)) ++counts[static_cast<std::size_t>(s.dim)];
    }
    return counts;
}

} // namespace enttopo
