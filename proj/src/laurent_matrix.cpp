#include "alexdef/laurent_matrix.hpp"

#include "alexdef/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace alexdef {

LaurentMatrix LaurentMatrix::identity(int n, const FieldTower::Ptr& t) {
    LaurentMatrix m(n, n, t);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(t);
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("LaurentMatrix: dimension mismatch");
    LaurentMatrix r(rows_, rhs.cols_, tower_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const LaurentPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

LaurentMatrix LaurentMatrix::derivation_D() const {
    LaurentMatrix r = *this;
    for (LaurentPoly& p : r.e_) p = p.derivation_D();
    return r;
}

std::string LaurentMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[[" : " [");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << (i + 1 == rows_ ? "]]" : "]\n");
    }
    return os.str();
}

LaurentPoly laurent_det(const LaurentMatrix& a, const std::vector<int>& row_idx,
                        const std::vector<int>& col_idx) {
    int k = static_cast<int>(row_idx.size());
    if (k != static_cast<int>(col_idx.size()))
        throw std::invalid_argument("laurent_det: non-square index selection");
    const FieldTower::Ptr& t = a.tower();
    if (k == 0) return LaurentPoly::one(t);
    // dp[mask] = det of the first popcount(mask) rows against columns in mask,
    // filled in popcount order via Laplace expansion along the last row.
    std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<LaurentPoly> dp(full + 1, LaurentPoly::zero(t));
    std::vector<std::size_t> by_count;
    by_count.reserve(full + 1);
    for (std::size_t mask = 1; mask <= full; ++mask) by_count.push_back(mask);
    std::sort(by_count.begin(), by_count.end(), [](std::size_t x, std::size_t y) {
        int px = __builtin_popcountll(x), py = __builtin_popcountll(y);
        return px != py ? px < py : x < y;
    });
    dp[0] = LaurentPoly::one(t);
    for (std::size_t mask : by_count) {
        int r = __builtin_popcountll(mask);
        LaurentPoly acc = LaurentPoly::zero(t);
        int pos = 0;
        for (int j = 0; j < k; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const LaurentPoly& entry = a.at(row_idx[static_cast<std::size_t>(r - 1)],
                                            col_idx[static_cast<std::size_t>(j)]);
            if (!entry.is_zero()) {
                LaurentPoly contrib = entry * dp[mask ^ (std::size_t{1} << j)];
                if ((r - 1 + pos) % 2 == 0)
                    acc += contrib;
                else
                    acc -= contrib;
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp[full];
}

LaurentPoly laurent_det(const LaurentMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("laurent_det: matrix not square");
    std::vector<int> idx(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return laurent_det(a, idx, idx);
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void check_minor_order(const LaurentMatrix& a, int order) {
    if (order < 0 || order > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("minors_gcd: order exceeds matrix dimensions");
}

} // namespace

LaurentPoly minors_gcd_serial(const LaurentMatrix& a, int order) {
    check_minor_order(a, order);
    const FieldTower::Ptr& t = a.tower();
    if (order == 0) return LaurentPoly::one(t);
    std::vector<std::vector<int>> row_sets = combinations(a.rows(), order);
    std::vector<std::vector<int>> col_sets = combinations(a.cols(), order);
    LaurentPoly acc = LaurentPoly::zero(t);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            LaurentPoly m = laurent_det(a, rs, cs);
            if (m.is_zero()) continue;
            acc = acc.is_zero() ? m.normalize_unit().first : laurent_gcd(acc, m);
            if (acc.is_one()) return acc;
        }
    return acc;
}

LaurentPoly minors_gcd_parallel(const LaurentMatrix& a, int order) {
    check_minor_order(a, order);
    const FieldTower::Ptr& t = a.tower();
    if (order == 0) return LaurentPoly::one(t);
    std::vector<std::vector<int>> row_sets = combinations(a.rows(), order);
    std::vector<std::vector<int>> col_sets = combinations(a.cols(), order);
    std::size_t total = row_sets.size() * col_sets.size();
    // Minors are enumerated in fixed-size chunks. Within a chunk the
    // determinants go to indexed slots in parallel and the gcd fold runs on
    // fixed contiguous segments, one per thread slot; unit-normalized gcds
    // are canonical, so the combined result (including the early exit at
    // gcd 1 between chunks) does not depend on the schedule.
    constexpr std::size_t chunk = 64;
    int nseg = 1;
#ifdef _OPENMP
    nseg = std::max(1, omp_get_max_threads());
#endif
    LaurentPoly acc = LaurentPoly::zero(t);
    std::vector<LaurentPoly> minors;
    for (std::size_t start = 0; start < total; start += chunk) {
        std::size_t n = std::min(chunk, total - start);
        minors.assign(n, LaurentPoly::zero(t));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long k = 0; k < static_cast<long long>(n); ++k) {
            std::size_t i = start + static_cast<std::size_t>(k);
            minors[static_cast<std::size_t>(k)] =
                laurent_det(a, row_sets[i / col_sets.size()], col_sets[i % col_sets.size()]);
        }
        std::size_t seg_len = (n + static_cast<std::size_t>(nseg) - 1) / static_cast<std::size_t>(nseg);
        std::vector<LaurentPoly> seg_gcd(static_cast<std::size_t>(nseg), LaurentPoly::zero(t));
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
        for (int s = 0; s < nseg; ++s) {
            LaurentPoly g = LaurentPoly::zero(t);
            std::size_t lo = static_cast<std::size_t>(s) * seg_len;
            std::size_t hi = std::min(n, lo + seg_len);
            for (std::size_t k = lo; k < hi; ++k) {
                const LaurentPoly& m = minors[k];
                if (m.is_zero()) continue;
                g = g.is_zero() ? m.normalize_unit().first : laurent_gcd(g, m);
                if (g.is_one()) break;
            }
            seg_gcd[static_cast<std::size_t>(s)] = std::move(g);
        }
        for (const LaurentPoly& g : seg_gcd) {
            if (g.is_zero()) continue;
            acc = acc.is_zero() ? g : laurent_gcd(acc, g);
            if (acc.is_one()) return acc;
        }
    }
    return acc;
}

LaurentPoly minors_gcd(const LaurentMatrix& a, int order, MinorsMode mode) {
    check_minor_order(a, order);
    if (mode == MinorsMode::Serial) return minors_gcd_serial(a, order);
    if (mode == MinorsMode::Parallel) return minors_gcd_parallel(a, order);
    std::size_t rows_choose = combinations(a.rows(), order).size();
    std::size_t cols_choose = combinations(a.cols(), order).size();
    return rows_choose * cols_choose >= 16 ? minors_gcd_parallel(a, order)
                                           : minors_gcd_serial(a, order);
}

std::vector<LaurentPoly> SmithDecompositionR::diagonal_ascending() const {
    int n = std::min(d.rows(), d.cols());
    std::vector<LaurentPoly> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diag.push_back(d.at(i, i));
    return diag;
}

std::vector<LaurentPoly> SmithDecompositionR::factors() const {
    std::vector<LaurentPoly> f = diagonal_ascending();
    std::reverse(f.begin(), f.end());
    return f;
}

int SmithDecompositionR::rank() const {
    int r = 0;
    for (const LaurentPoly& p : diagonal_ascending())
        if (!p.is_zero()) ++r;
    return r;
}

namespace {

struct SnfRState {
    LaurentMatrix a, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int i, int j, const LaurentPoly& c) {
        for (int k = 0; k < a.cols(); ++k) a.at(i, k) += c * a.at(j, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
    }
    void add_col(int i, int j, const LaurentPoly& c) {
        for (int k = 0; k < a.rows(); ++k) a.at(k, i) += c * a.at(k, j);
        for (int k = 0; k < v.rows(); ++k) v.at(k, i) += c * v.at(k, j);
    }
    void scale_row(int i, const LaurentPoly& unit) {
        for (int k = 0; k < a.cols(); ++k) a.at(i, k) *= unit;
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) *= unit;
    }

    bool find_pivot(int k, int& pr, int& pc) const {
        bool found = false;
        long best = 0;
        for (int i = k; i < a.rows(); ++i)
            for (int j = k; j < a.cols(); ++j) {
                const LaurentPoly& x = a.at(i, j);
                if (x.is_zero()) continue;
                if (!found || x.span() < best) {
                    found = true;
                    best = x.span();
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }
};

} // namespace

SmithDecompositionR smith_normal_form_laurent(const LaurentMatrix& a) {
    const FieldTower::Ptr& t = a.tower();
    SnfRState s{a, LaurentMatrix::identity(a.rows(), t), LaurentMatrix::identity(a.cols(), t)};
    int n = std::min(a.rows(), a.cols());
    for (int k = 0; k < n; ++k) {
        int pr, pc;
        if (!s.find_pivot(k, pr, pc)) break;
        s.swap_rows(k, pr);
        s.swap_cols(k, pc);
        for (;;) {
            bool dirty = false;
            for (int i = k + 1; i < s.a.rows(); ++i) {
                if (s.a.at(i, k).is_zero()) continue;
                LaurentPoly q = laurent_divmod(s.a.at(i, k), s.a.at(k, k)).first;
                s.add_row(i, k, -q);
                if (!s.a.at(i, k).is_zero()) {
                    s.swap_rows(k, i);
                    dirty = true;
                }
            }
            for (int j = k + 1; j < s.a.cols(); ++j) {
                if (s.a.at(k, j).is_zero()) continue;
                LaurentPoly q = laurent_divmod(s.a.at(k, j), s.a.at(k, k)).first;
                s.add_col(j, k, -q);
                if (!s.a.at(k, j).is_zero()) {
                    s.swap_cols(k, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            bool divides = true;
            for (int i = k + 1; i < s.a.rows() && divides; ++i)
                for (int j = k + 1; j < s.a.cols() && divides; ++j)
                    if (!divide_exact(s.a.at(i, j), s.a.at(k, k))) {
                        s.add_row(k, i, LaurentPoly::one(t));
                        divides = false;
                    }
            if (divides) break;
        }
        auto [canon, unit] = s.a.at(k, k).normalize_unit();
        if (unit.n != 0 || !unit.a.is_one()) {
            LaurentPoly unit_inv = LaurentPoly::monomial(t, unit.a.inv(), -unit.n);
            s.scale_row(k, unit_inv);
        }
    }
    return {s.u, s.a, s.v};
}

} // namespace alexdef
