#pragma once

namespace enttopo {

// Numeric conventions shared across the library, collected in one place so
// every tolerance used by the algorithms is pinned and discoverable.
//
// Eigenvalues below `eigenvalue_floor` are treated as exact zeros inside
// entropy sums (the 0 * log 0 = 0 convention).
struct NumericConfig {
    double eigenvalue_floor = 1e-12;          // spectrum clamp in entropy sums
    double norm_tolerance = 1e-12;            // |psi| deviation at construction
    double state_file_norm_tolerance = 1e-9;  // looser check when loading JSON
    double hermitian_tolerance = 1e-10;       // entrywise, DensityMatrix ctor
    double trace_tolerance = 1e-10;           // |tr - 1|, DensityMatrix ctor
    double birth_tolerance = 1e-9;            // downward closure slack, birth
                                              // equality, critical-value snap
    double support_entropy_tolerance = 1e-10; // stabilizer vs dense entropy
    double jacobi_off_norm = 1e-12;           // off-diagonal Frobenius norm at
                                              // eigensolver convergence
    int max_qubits = 12;                      // dense 2^n amplitude cap
};

inline constexpr NumericConfig kNumeric{};

} // namespace enttopo
