#pragma once

#include "alexdef/field.hpp"

#include <optional>
#include <vector>

namespace alexdef {

/// Dense matrix over one FieldTower.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(int rows, int cols, const FieldTower::Ptr& t)
        : rows_(rows), cols_(cols), tower_(t),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             FieldElem::zero(t)) {}

    static FieldMatrix identity(int n, const FieldTower::Ptr& t);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldTower::Ptr& tower() const { return tower_; }

    FieldElem& at(int r, int c) { return e_[idx(r, c)]; }
    const FieldElem& at(int r, int c) const { return e_[idx(r, c)]; }

    FieldMatrix operator*(const FieldMatrix& rhs) const;
    std::vector<FieldElem> apply(const std::vector<FieldElem>& x) const;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    FieldTower::Ptr tower_;
    std::vector<FieldElem> e_;
};

/// Row-reduced echelon form with the recording transform: transform * A = rref.
/// Pivoting is deterministic: scan columns left to right, take the first row
/// with a nonzero entry.
struct EchelonForm {
    FieldMatrix rref;
    FieldMatrix transform;
    std::vector<int> pivot_cols;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

EchelonForm echelon_form(const FieldMatrix& a);

int rank(const FieldMatrix& a);

/// Deterministic kernel basis from the RREF free-column parametrization: one
/// vector per free column (ascending), with value 1 at its free column.
std::vector<std::vector<FieldElem>> kernel_basis(const FieldMatrix& a);

/// Exact solve of A x = b: a particular solution and the kernel, or an
/// unsolvability certificate y with y^T A = 0 and y^T b != 0.
struct LinearSolveOutcome {
    bool solvable = false;
    int rank = 0;
    std::vector<FieldElem> solution;
    std::vector<std::vector<FieldElem>> kernel;
    std::vector<FieldElem> certificate;
};

LinearSolveOutcome linear_solve(const FieldMatrix& a, const std::vector<FieldElem>& b);

} // namespace alexdef
