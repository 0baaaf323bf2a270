#pragma once

#include "alexdef/numbers.hpp"

#include <optional>
#include <vector>

namespace alexdef {

/// Dense matrix with exact integer entries, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0)) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[idx(r, c)]; }
    const Int& at(int r, int c) const { return a_[idx(r, c)]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    /// row_i += c * row_j
    void add_row(int i, int j, const Int& c);
    /// col_i += c * col_j
    void add_col(int i, int j, const Int& c);

    std::string to_string() const;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, with the
/// divisibility chain d1 | d2 | ... . v_inv is maintained alongside V so that
/// V * v_inv = I without a separate inversion.
struct SmithDecompositionZ {
    IntMatrix u, d, v, v_inv;

    std::vector<Int> diagonal() const;
    int rank() const;
};

SmithDecompositionZ smith_normal_form_int(const IntMatrix& a);

/// One integer solution x of A x = b, if any (via the Smith decomposition).
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

} // namespace alexdef
