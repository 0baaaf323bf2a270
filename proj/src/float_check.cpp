#include "alexdef/float_check.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace alexdef {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::Index rows = static_cast<Eigen::Index>(m.size());
    Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(m[0].size()) : 0;
    Eigen::MatrixXcd e(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            e(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return e;
}

std::complex<double> eval_embedded_poly(const std::vector<std::complex<double>>& coeffs,
                                        std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

} // namespace

Embedding::Embedding(FieldTower::Ptr tower) : tower_(std::move(tower)) {
    double m = static_cast<double>(tower_->cyclotomic_order());
    double arg = 2.0 * std::numbers::pi / m;
    zeta_ = {std::cos(arg), std::sin(arg)};
    if (tower_->has_extension()) {
        // embed minpoly coefficients, then take companion-matrix eigenvalues
        int deg = tower_->ext_degree();
        std::vector<std::complex<double>> coeffs;
        coeffs.reserve(static_cast<std::size_t>(deg) + 1);
        for (const auto& cyc : tower_->ext_minpoly()) {
            std::complex<double> c = 0.0;
            std::complex<double> zp = 1.0;
            for (const Rat& q : cyc) {
                c += q.get_d() * zp;
                zp *= zeta_;
            }
            coeffs.push_back(c);
        }
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
        for (int i = 0; i < deg; ++i) {
            comp(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)];
            if (i > 0) comp(i, i - 1) = 1.0;
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp);
        std::complex<double> best = solver.eigenvalues()(0);
        for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i) {
            std::complex<double> cand = solver.eigenvalues()(i);
            double da = std::abs(cand) - std::abs(best);
            if (da > 1e-12 || (std::abs(da) <= 1e-12 &&
                               (cand.real() - best.real() > 1e-12 ||
                                (std::abs(cand.real() - best.real()) <= 1e-12 &&
                                 cand.imag() > best.imag()))))
                best = cand;
        }
        root_ = best;
        // a few Newton steps to tighten the eigenvalue estimate
        std::vector<std::complex<double>> deriv;
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            deriv.push_back(coeffs[i] * static_cast<double>(i));
        for (int it = 0; it < 4; ++it) {
            std::complex<double> f = eval_embedded_poly(coeffs, root_);
            std::complex<double> df = eval_embedded_poly(deriv, root_);
            if (std::abs(df) < 1e-14) break;
            root_ -= f / df;
        }
    }
}

std::complex<double> Embedding::operator()(const FieldElem& e) const {
    std::complex<double> acc = 0.0;
    std::complex<double> rp = 1.0;
    for (const auto& cyc : e.coords()) {
        std::complex<double> c = 0.0;
        std::complex<double> zp = 1.0;
        for (const Rat& q : cyc) {
            c += q.get_d() * zp;
            zp *= zeta_;
        }
        acc += c * rp;
        rp *= root_;
    }
    return acc;
}

int float_rank(const ComplexMatrix& m, double tol) {
    if (m.empty() || m[0].empty()) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    double smax = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    double cut = tol * std::max(1.0, smax);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cut) ++r;
    return r;
}

bool float_solvable(const ComplexMatrix& a, const std::vector<std::complex<double>>& b,
                    double tol) {
    ComplexMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    return float_rank(aug, tol) == float_rank(a, tol);
}

namespace {

ComplexMatrix embed_matrix(const Embedding& em, const FieldMatrix& m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                      std::vector<std::complex<double>>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = em(m.at(i, j));
    return out;
}

} // namespace

FloatCheckReport float_cross_check(const Presentation& p, const H1Structure& h,
                                   const CharacterAlpha& a, const DeformabilityReport& rep,
                                   double tol) {
    FloatCheckReport out;
    out.tolerance = tol;
    Embedding em(a.field_z);
    CharacterAlpha plus = a;
    plus.negative = false;

    auto add_rank_item = [&](const std::string& name, const CharacterAlpha& ch) {
        FieldMatrix m = character_matrix(p, ch);
        int exact = rank(m);
        int approx = float_rank(embed_matrix(em, m), tol);
        out.items.push_back({name, std::to_string(exact), std::to_string(approx),
                             exact == approx});
    };
    add_rank_item("rank A(z) for alpha+", plus);
    add_rank_item("rank A(z) for alpha-", plus.flipped());

    if (rep.zero_ord && *rep.zero_ord == 1 && rep.dim_h1_plus && *rep.dim_h1_plus == 1) {
        CocycleVec dplus = cocycle_generator(p, plus);
        TwistSetup tw_eff = plus.effective_twist(h);
        LaurentMatrix jac_m = jacobian(p, tw_eff);
        LaurentMatrix djac = jac_m.derivation_D();
        FieldMatrix jz(p.nrels(), p.ngens(), plus.field_z);
        std::vector<FieldElem> rhs(static_cast<std::size_t>(p.nrels()),
                                   FieldElem::zero(plus.field_z));
        for (int j = 0; j < p.nrels(); ++j) {
            FieldElem s = FieldElem::zero(plus.field_z);
            for (int i = 0; i < p.ngens(); ++i) {
                jz.at(j, i) = jac_m.at(j, i).evaluate(plus.z);
                s += djac.at(j, i).evaluate(plus.z) * dplus.values[static_cast<std::size_t>(i)];
            }
            rhs[static_cast<std::size_t>(j)] = -s;
        }
        bool exact_solvable = linear_solve(jz, rhs).solvable;
        std::vector<std::complex<double>> fb;
        fb.reserve(rhs.size());
        for (const FieldElem& e : rhs) fb.push_back(em(e));
        bool approx_solvable = float_solvable(embed_matrix(em, jz), fb, tol);
        out.items.push_back({"obstruction system solvable",
                             exact_solvable ? "true" : "false",
                             approx_solvable ? "true" : "false",
                             exact_solvable == approx_solvable});
    }

    for (const FloatCheckItem& it : out.items)
        if (!it.agrees) out.all_agree = false;
    return out;
}

} // namespace alexdef
