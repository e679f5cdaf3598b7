#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "enttopo/config.hpp"

namespace enttopo {

using cplx = std::complex<double>;

/**
 * A subset of the qubit set {0, ..., n-1}, stored as a bitmask.
 *
 * Qubit i corresponds to bit i of a basis-state index (little-endian); every
 * mask in the library shares this convention with PureState amplitudes.
 */
class QubitSubset {
  public:
    QubitSubset(std::uint32_t mask, int n_context);

    static QubitSubset empty_set(int n_context);
    static QubitSubset full_set(int n_context);
    static QubitSubset singleton(int qubit, int n_context);
    static QubitSubset from_members(const std::vector<int>& qubits, int n_context);

    std::uint32_t mask() const { return mask_; }
    int context_size() const { return n_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int qubit) const;
    bool is_subset_of(const QubitSubset& other) const;
    bool disjoint_from(const QubitSubset& other) const;
    QubitSubset complement() const;
    QubitSubset united(const QubitSubset& other) const;
    std::vector<int> members() const;

    friend bool operator==(const QubitSubset& a, const QubitSubset& b) {
        return a.mask_ == b.mask_ && a.n_ == b.n_;
    }

  private:
    std::uint32_t mask_;
    int n_;
};

/**
 * Pure state of n qubits as a dense, unit-norm amplitude vector of length 2^n.
 * Immutable after construction; the constructor rejects wrong-length or
 * unnormalized vectors.
 */
class PureState {
  public:
    PureState(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    const cplx& amp(std::size_t basis_index) const { return amps_[basis_index]; }

  private:
    int n_;
    std::vector<cplx> amps_;
};

/**
 * Hermitian, trace-one complex matrix (a reduced state rho_J). The dimension
 * is a power of two. Hermiticity and unit trace are validated on
 * construction; positive semidefiniteness is enforced when the spectrum is
 * taken (see eigvals_hermitian).
 */
class DensityMatrix {
  public:
    DensityMatrix(int dim, std::vector<cplx> entries);

    int dim() const { return dim_; }
    const cplx& at(int row, int col) const { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
    const std::vector<cplx>& entries() const { return a_; }

    /// tr(rho^2), evaluated directly from the entries (no diagonalization).
    double purity() const;

  private:
    int dim_;
    std::vector<cplx> a_;
};

/// GHZ state (|0...0> + |1...1>) / sqrt(2) on n qubits, 1 <= n <= 12.
PureState make_ghz(int n);

/// W state: uniform superposition of the n weight-one basis states, n >= 2.
PureState make_w(int n);

/// Product state |0...0>.
PureState make_product_zero(int n);

/**
 * Haar-like random pure state: i.i.d. standard complex Gaussian amplitudes
 * (mt19937_64 + Box-Muller), normalized. Deterministic per seed.
 */
PureState random_pure(int n, std::uint64_t seed);

/**
 * Reduced state over `keep`. keep = full set returns |psi><psi|; keep = {}
 * returns the 1x1 matrix [1].
 */
DensityMatrix partial_trace(const PureState& state, QubitSubset keep);

/**
 * Real spectrum of a density matrix, sorted descending, clamped to [0, 1].
 * Uses a cyclic complex Jacobi sweep; converged when the off-diagonal
 * Frobenius norm drops below kNumeric.jacobi_off_norm. The clamped values sum
 * to 1 within 1e-9 for any valid DensityMatrix.
 */
std::vector<double> eigvals_hermitian(const DensityMatrix& dm);

/// von Neumann entropy -sum(lambda log2 lambda) in bits; lambda below the
/// eigenvalue floor are skipped.
double von_neumann_entropy(const DensityMatrix& dm);

/**
 * Tsallis q-entropy (tr rho^q - 1) / (1 - q), via the spectrum. q must not be
 * 0 or 1; use von_neumann_entropy for the q -> 1 limit (which lands in nats,
 * i.e. equals S * ln 2).
 */
double tsallis_entropy(const DensityMatrix& dm, double q);

/// Linear entropy 1 - tr(rho^2), the q = 2 Tsallis entropy, computed without
/// diagonalizing.
double linear_entropy(const DensityMatrix& dm);

} // namespace enttopo
