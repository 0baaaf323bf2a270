#pragma once

#include "alexdef/laurent.hpp"

#include <vector>

namespace alexdef {

/// Dense rectangular matrix over K[t^+-1], row major.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols, const FieldTower::Ptr& t)
        : rows_(rows), cols_(cols), tower_(t),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             LaurentPoly::zero(t)) {}

    static LaurentMatrix identity(int n, const FieldTower::Ptr& t);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldTower::Ptr& tower() const { return tower_; }

    LaurentPoly& at(int r, int c) { return e_[idx(r, c)]; }
    const LaurentPoly& at(int r, int c) const { return e_[idx(r, c)]; }

    LaurentMatrix operator*(const LaurentMatrix& rhs) const;
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);

    /// Entrywise D operator.
    LaurentMatrix derivation_D() const;

    std::string to_string() const;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    FieldTower::Ptr tower_;
    std::vector<LaurentPoly> e_;
};

/// Exact determinant by Laplace expansion with column-subset memoization.
LaurentPoly laurent_det(const LaurentMatrix& a);
LaurentPoly laurent_det(const LaurentMatrix& a, const std::vector<int>& row_idx,
                        const std::vector<int>& col_idx);

enum class MinorsMode { Auto, Serial, Parallel };

/// Unit-normalized GCD of all order x order minors; 1 for order 0, 0 when all
/// minors vanish. order > min(rows, cols) is an error. The parallel kernel
/// enumerates minors with OpenMP and folds in a fixed order, so results are
/// deterministic regardless of schedule; the serial path is the reference.
LaurentPoly minors_gcd(const LaurentMatrix& a, int order, MinorsMode mode = MinorsMode::Auto);
LaurentPoly minors_gcd_serial(const LaurentMatrix& a, int order);
LaurentPoly minors_gcd_parallel(const LaurentMatrix& a, int order);

/// U * A * V = D over K[t^+-1] with unit-determinant transforms and
/// unit-normalized diagonal in ascending divisibility order. `factors()`
/// returns the diagonal in the descending (module-decomposition) order
/// r_0, r_1, ... with r_{i+1} | r_i, zeros first.
struct SmithDecompositionR {
    LaurentMatrix u, d, v;

    std::vector<LaurentPoly> diagonal_ascending() const;
    std::vector<LaurentPoly> factors() const;
    int rank() const;
};

SmithDecompositionR smith_normal_form_laurent(const LaurentMatrix& a);

} // namespace alexdef
