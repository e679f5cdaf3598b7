#include "enttopo/f2matrix.hpp"

#include <stdexcept>

namespace enttopo {

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("F2Matrix: negative dimension");
    }
}

bool F2Matrix::get(int row, int col) const {
    return (bits_[static_cast<std::size_t>(row) * words_per_row_ + col / 64] >> (col % 64)) & 1u;
}

void F2Matrix::set(int row, int col, bool value) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(row) * words_per_row_ + col / 64];
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    if (value) {
        w |= bit;
    } else {
        w &= ~bit;
    }
}

void F2Matrix::flip(int row, int col) {
    bits_[static_cast<std::size_t>(row) * words_per_row_ + col / 64] ^=
        std::uint64_t{1} << (col % 64);
}

int F2Matrix::rank() const {
    std::vector<std::uint64_t> work = bits_;
    auto row_ptr = [&](int r) { return work.data() + static_cast<std::size_t>(r) * words_per_row_; };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        const int word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (row_ptr(r)[word] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int w = 0; w < words_per_row_; ++w) std::swap(row_ptr(pivot)[w], row_ptr(rank)[w]);
        }
        for (int r = 0; r < rows_; ++r) {
            if (r != rank && (row_ptr(r)[word] & bit)) {
                for (int w = 0; w < words_per_row_; ++w) row_ptr(r)[w] ^= row_ptr(rank)[w];
            }
        }
        ++rank;
    }
    return rank;
}

bool F2Matrix::is_zero() const {
    for (std::uint64_t w : bits_) {
        if (w != 0) return false;
    }
    return true;
}

F2Matrix F2Matrix::multiply(const F2Matrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("F2Matrix: inner dimensions do not match");
    }
    F2Matrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            if (!get(i, k)) continue;
            for (int w = 0; w < other.words_per_row_; ++w) {
                out.bits_[static_cast<std::size_t>(i) * out.words_per_row_ + w] ^=
                    other.bits_[static_cast<std::size_t>(k) * other.words_per_row_ + w];
            }
        }
    }
    return out;
}

} // namespace enttopo
