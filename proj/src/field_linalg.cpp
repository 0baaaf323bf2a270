#include "alexdef/field_linalg.hpp"

#include "alexdef/errors.hpp"

#include <cassert>

namespace alexdef {

FieldMatrix FieldMatrix::identity(int n, const FieldTower::Ptr& t) {
    FieldMatrix m(n, n, t);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(t);
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("FieldMatrix: dimension mismatch");
    FieldMatrix r(rows_, rhs.cols_, tower_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

std::vector<FieldElem> FieldMatrix::apply(const std::vector<FieldElem>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("FieldMatrix::apply: size mismatch");
    std::vector<FieldElem> y(static_cast<std::size_t>(rows_), FieldElem::zero(tower_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            y[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
        }
    return y;
}

EchelonForm echelon_form(const FieldMatrix& a) {
    EchelonForm f{a, FieldMatrix::identity(a.rows(), a.tower()), {}};
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!f.rref.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < a.cols(); ++j) {
                std::swap(f.rref.at(pivot, j), f.rref.at(row, j));
            }
        if (pivot != row)
            for (int j = 0; j < a.rows(); ++j)
                std::swap(f.transform.at(pivot, j), f.transform.at(row, j));
        FieldElem inv = f.rref.at(row, col).inv();
        for (int j = 0; j < a.cols(); ++j) f.rref.at(row, j) *= inv;
        for (int j = 0; j < a.rows(); ++j) f.transform.at(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            FieldElem factor = f.rref.at(i, col);
            if (factor.is_zero()) continue;
            for (int j = 0; j < a.cols(); ++j)
                f.rref.at(i, j) -= factor * f.rref.at(row, j);
            for (int j = 0; j < a.rows(); ++j)
                f.transform.at(i, j) -= factor * f.transform.at(row, j);
        }
        f.pivot_cols.push_back(col);
        ++row;
    }
    return f;
}

int rank(const FieldMatrix& a) { return echelon_form(a).rank(); }

std::vector<std::vector<FieldElem>> kernel_basis(const FieldMatrix& a) {
    EchelonForm f = echelon_form(a);
    const FieldTower::Ptr& t = a.tower();
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : f.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<FieldElem> v(static_cast<std::size_t>(a.cols()), FieldElem::zero(t));
        v[static_cast<std::size_t>(free)] = FieldElem::one(t);
        for (int r = 0; r < f.rank(); ++r)
            v[static_cast<std::size_t>(f.pivot_cols[static_cast<std::size_t>(r)])] =
                -f.rref.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolveOutcome linear_solve(const FieldMatrix& a, const std::vector<FieldElem>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("linear_solve: rhs size mismatch");
    const FieldTower::Ptr& t = a.tower();
    EchelonForm f = echelon_form(a);
    LinearSolveOutcome out;
    out.rank = f.rank();
    std::vector<FieldElem> tb(static_cast<std::size_t>(a.rows()), FieldElem::zero(t));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) {
            if (f.transform.at(i, j).is_zero()) continue;
            tb[static_cast<std::size_t>(i)] += f.transform.at(i, j) * b[static_cast<std::size_t>(j)];
        }
    for (int i = f.rank(); i < a.rows(); ++i) {
        if (tb[static_cast<std::size_t>(i)].is_zero()) continue;
        out.solvable = false;
        out.certificate.reserve(static_cast<std::size_t>(a.rows()));
        for (int j = 0; j < a.rows(); ++j) out.certificate.push_back(f.transform.at(i, j));
        return out;
    }
    out.solvable = true;
    out.solution.assign(static_cast<std::size_t>(a.cols()), FieldElem::zero(t));
    for (int r = 0; r < f.rank(); ++r)
        out.solution[static_cast<std::size_t>(f.pivot_cols[static_cast<std::size_t>(r)])] =
            tb[static_cast<std::size_t>(r)];
    out.kernel = kernel_basis(a);
    return out;
}

} // namespace alexdef
