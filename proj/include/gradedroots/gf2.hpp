#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gradedroots {

/// Dense matrix over the two-element field with 64-bit packed rows and
/// exact Gaussian elimination. Sizes are bounded by the vertex count of a
/// graded root.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void xor_row(int dst, int src);

    static Gf2Matrix identity(int n);

    /// this * other (composition of linear maps given by column-action).
    Gf2Matrix multiply(const Gf2Matrix& other) const;

    std::vector<bool> apply(const std::vector<bool>& v) const;

    int rank() const;

    /// Basis of the right kernel {x : A x = 0}.
    std::vector<std::vector<bool>> null_space() const;

    /// One solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<uint64_t> data_;  // rows_ * words_
};

}  // namespace gradedroots
