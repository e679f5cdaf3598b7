#pragma once

#include <cstdint>
#include <vector>

namespace enttopo {

/**
 * Dense bit matrix over F2. Shared by the stabilizer-support rank formula
 * (adjacency submatrices) and the homology engine (boundary operators).
 */
class F2Matrix {
  public:
    F2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int row, int col) const;
    void set(int row, int col, bool value);
    void flip(int row, int col);

    /// Rank by Gaussian elimination on a scratch copy. Deterministic.
    int rank() const;

    bool is_zero() const;

    /// F2 product (this * other); used to check boundary composition.
    F2Matrix multiply(const F2Matrix& other) const;

  private:
    int rows_;
    int cols_;
    int words_per_row_;
    std::vector<std::uint64_t> bits_;
};

} // namespace enttopo
