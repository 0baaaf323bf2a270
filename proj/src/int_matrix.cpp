#include "alexdef/int_matrix.hpp"

#include "alexdef/errors.hpp"

#include <sstream>
#include <utility>

namespace alexdef {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(m.at(k, k)) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(m.at(i, k)) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::vector<Int> SmithDecompositionZ::diagonal() const {
    int n = std::min(d.rows(), d.cols());
    std::vector<Int> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diag.push_back(d.at(i, i));
    return diag;
}

int SmithDecompositionZ::rank() const {
    int r = 0;
    for (const Int& x : diagonal())
        if (sgn(x) != 0) ++r;
    return r;
}

namespace {

// Column operations are mirrored on v (right multiplication) and inverted on
// v_inv (left multiplication) so v * v_inv = I is maintained throughout.
struct SnfState {
    IntMatrix a, u, v, v_inv;

    void swap_rows(int i, int j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
    }
    void swap_cols(int i, int j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    void negate_row(int i) {
        a.negate_row(i);
        u.negate_row(i);
    }
    void add_row(int i, int j, const Int& c) {
        a.add_row(i, j, c);
        u.add_row(i, j, c);
    }
    void add_col(int i, int j, const Int& c) {
        a.add_col(i, j, c);
        v.add_col(i, j, c);
        v_inv.add_row(j, i, -c);
    }
};

// Smallest nonzero absolute value in the submatrix at (k,k), row-major scan.
bool find_pivot(const IntMatrix& a, int k, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = k; i < a.rows(); ++i)
        for (int j = k; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (sgn(x) == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SmithDecompositionZ smith_normal_form_int(const IntMatrix& a) {
    SnfState s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
               IntMatrix::identity(a.cols())};
    int n = std::min(a.rows(), a.cols());
    for (int k = 0; k < n; ++k) {
        int pr, pc;
        if (!find_pivot(s.a, k, pr, pc)) break;
        s.swap_rows(k, pr);
        s.swap_cols(k, pc);
        for (;;) {
            // Reduce column k then row k against the pivot; swaps pull any
            // nonzero remainder into the pivot slot, shrinking |pivot|.
            bool dirty = false;
            for (int i = k + 1; i < s.a.rows(); ++i) {
                if (sgn(s.a.at(i, k)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(i, k).get_mpz_t(), s.a.at(k, k).get_mpz_t());
                s.add_row(i, k, -q);
                if (sgn(s.a.at(i, k)) != 0) {
                    s.swap_rows(k, i);
                    dirty = true;
                }
            }
            for (int j = k + 1; j < s.a.cols(); ++j) {
                if (sgn(s.a.at(k, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.a.at(k, j).get_mpz_t(), s.a.at(k, k).get_mpz_t());
                s.add_col(j, k, -q);
                if (sgn(s.a.at(k, j)) != 0) {
                    s.swap_cols(k, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the submatrix; fold a bad row in
            // and keep reducing.
            bool divides = true;
            for (int i = k + 1; i < s.a.rows() && divides; ++i)
                for (int j = k + 1; j < s.a.cols() && divides; ++j)
                    if (!mpz_divisible_p(s.a.at(i, j).get_mpz_t(), s.a.at(k, k).get_mpz_t())) {
                        s.add_row(k, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (sgn(s.a.at(k, k)) < 0) s.negate_row(k);
    }
    return {s.u, s.a, s.v, s.v_inv};
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_integer: rhs size mismatch");
    SmithDecompositionZ s = smith_normal_form_int(a);
    // A x = b  <=>  D (V^-1 x) = U b
    std::vector<Int> ub(static_cast<std::size_t>(a.rows()), Int(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) ub[static_cast<std::size_t>(i)] += s.u.at(i, j) * b[static_cast<std::size_t>(j)];
    std::vector<Int> y(static_cast<std::size_t>(a.cols()), Int(0));
    int n = std::min(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        const Int& rhs = ub[static_cast<std::size_t>(i)];
        if (i < n && sgn(s.d.at(i, i)) != 0) {
            if (!mpz_divisible_p(rhs.get_mpz_t(), s.d.at(i, i).get_mpz_t())) return std::nullopt;
            mpz_divexact(y[static_cast<std::size_t>(i)].get_mpz_t(), rhs.get_mpz_t(),
                         s.d.at(i, i).get_mpz_t());
        } else if (sgn(rhs) != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(static_cast<std::size_t>(a.cols()), Int(0));
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < a.cols(); ++j) x[static_cast<std::size_t>(i)] += s.v.at(i, j) * y[static_cast<std::size_t>(j)];
    return x;
}

} // namespace alexdef
