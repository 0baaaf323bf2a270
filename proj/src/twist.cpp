#include "alexdef/twist.hpp"

#include "alexdef/errors.hpp"

#include <cassert>

namespace alexdef {

bool TwistSetup::sigma_trivial() const {
    Int m(field->cyclotomic_order());
    for (const Int& e : sigma_exp)
        if (sgn(mod_floor(e, m)) != 0) return false;
    return true;
}

FieldElem TwistSetup::sigma_of(const std::vector<Int>& torsion_coords) const {
    Int e(0);
    for (std::size_t i = 0; i < sigma_exp.size(); ++i) e += sigma_exp[i] * torsion_coords[i];
    return FieldElem::zeta(field, e);
}

TwistSetup make_twist(const H1Structure& h, SplittingData split, std::vector<Int> sigma_exp) {
    if (sigma_exp.size() != split.torsion.size())
        throw precondition_error("sigma needs one exponent per torsion invariant");
    Int m = h.torsion_exponent();
    for (std::size_t i = 0; i < sigma_exp.size(); ++i) {
        Int prod = sigma_exp[i] * split.torsion[i];
        if (sgn(mod_floor(prod, m)) != 0)
            throw precondition_error(
                "sigma is not a homomorphism: zeta^" + sigma_exp[i].get_str() +
                " does not have order dividing " + split.torsion[i].get_str());
    }
    if (!m.fits_uint_p()) throw precondition_error("torsion exponent out of range");
    TwistSetup tw{std::move(split), std::move(sigma_exp),
                  FieldTower::cyclotomic(static_cast<unsigned>(m.get_ui()))};
    return tw;
}

TwistSetup trivial_twist(const H1Structure& h, SplittingData split) {
    std::vector<Int> exps(split.torsion.size(), Int(0));
    return make_twist(h, std::move(split), std::move(exps));
}

std::vector<Int> sigma_from_generator_values(const H1Structure& h, const SplittingData& split,
                                             const std::vector<std::pair<int, Int>>& prescribed) {
    int n = static_cast<int>(prescribed.size());
    int r = split.torsion_rank();
    Int m = h.torsion_exponent();
    // Unknowns (e_1..e_r, y_1..y_n, w_1..w_r):
    //   sum_i P_ji e_i + m y_j = given_j   and   d_i e_i + m w_i = 0.
    IntMatrix a(n + r, r + n + r);
    std::vector<Int> b;
    b.reserve(static_cast<std::size_t>(n + r));
    for (int j = 0; j < n; ++j) {
        auto [gen, w] = prescribed[static_cast<std::size_t>(j)];
        if (gen < 0 || gen >= split.ngens())
            throw precondition_error("sigma prescription on an unknown generator index");
        for (int i = 0; i < r; ++i) a.at(j, i) = split.proj.at(gen, i);
        a.at(j, r + j) = m;
        b.push_back(w);
    }
    for (int i = 0; i < r; ++i) {
        a.at(n + i, i) = split.torsion[static_cast<std::size_t>(i)];
        a.at(n + i, r + n + i) = m;
        b.push_back(Int(0));
    }
    std::optional<std::vector<Int>> x = solve_integer(a, b);
    if (!x)
        throw precondition_error(
            "sigma prescription is not a well-defined homomorphism on the torsion subgroup");
    std::vector<Int> exps;
    exps.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) exps.push_back(mod_floor((*x)[static_cast<std::size_t>(i)], m));
    return exps;
}

LaurentPoly twist_word(const TwistSetup& tw, const FreeWord& w, int ngens) {
    std::vector<Int> v = w.exponent_vector(ngens);
    FieldElem sigma = tw.sigma_of(tw.split.proj_of(v));
    Int phi = tw.split.phi_of(v);
    if (!phi.fits_slong_p()) throw precondition_error("phi exponent out of range");
    return LaurentPoly::monomial(tw.field, sigma, phi.get_si());
}

LaurentPoly twist_polynomial(const IntGroupRing& e, const TwistSetup& tw, int ngens) {
    LaurentPoly acc = LaurentPoly::zero(tw.field);
    for (const auto& [w, c] : e.terms())
        acc += twist_word(tw, w, ngens) * FieldElem::from_rat(tw.field, Rat(c));
    return acc;
}

LaurentMatrix jacobian(const Presentation& p, const TwistSetup& tw) {
    LaurentMatrix j(p.nrels(), p.ngens(), tw.field);
    for (int row = 0; row < p.nrels(); ++row)
        for (int col = 0; col < p.ngens(); ++col)
            j.at(row, col) = twist_polynomial(
                fox_derivative(p.relators[static_cast<std::size_t>(row)], col), tw, p.ngens());
    return j;
}

const LaurentPoly& AlexanderSequence::delta(int k) const {
    if (k < 0) throw std::invalid_argument("AlexanderSequence: negative index");
    if (k < static_cast<int>(deltas.size())) return deltas[static_cast<std::size_t>(k)];
    return one_poly;
}

AlexanderSequence alexander_polynomials(const LaurentMatrix& jac, int up_to) {
    const FieldTower::Ptr& t = jac.tower();
    int n = jac.cols();
    if (up_to < 0) up_to = n > 0 ? n - 1 : 0;
    AlexanderSequence seq;
    seq.one_poly = LaurentPoly::one(t);
    SmithDecompositionR snf = smith_normal_form_laurent(jac);
    std::vector<LaurentPoly> diag = snf.diagonal_ascending();
    for (int k = 0; k <= up_to; ++k) {
        int order = n - k - 1;
        LaurentPoly delta(t);
        if (order <= 0) {
            delta = LaurentPoly::one(t);
        } else if (order > jac.rows()) {
            // no minors of this order exist: the elementary ideal is zero
            delta = LaurentPoly::zero(t);
        } else {
            delta = minors_gcd(jac, order);
            // cross-check against the invariant-factor product
            LaurentPoly prod = LaurentPoly::one(t);
            for (int i = 0; i < order; ++i) prod *= diag[static_cast<std::size_t>(i)];
            if (!equal_up_to_unit(delta, prod))
                throw internal_inconsistency(
                    "minors GCD and Smith normal form disagree for Delta_" + std::to_string(k));
        }
        seq.deltas.push_back(std::move(delta));
    }
    seq.positive_rank = !seq.deltas.empty() && seq.deltas.front().is_zero();
    return seq;
}

SymmetryCheck is_symmetric(const LaurentPoly& d) {
    if (d.is_zero()) throw precondition_error("symmetry test needs a nonzero polynomial");
    auto [canon_d, unit_d] = d.normalize_unit();
    auto [canon_bar, unit_bar] = d.bar().normalize_unit();
    SymmetryCheck out;
    out.symmetric = canon_d == canon_bar;
    if (out.symmetric)
        out.unit = LaurentUnit{unit_bar.a * unit_d.a.inv(), unit_bar.n - unit_d.n};
    return out;
}

LaurentPoly integer_normal_form(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    const FieldTower::Ptr& t = f.tower();
    Int den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : f.terms()) {
        Rat q;
        if (!c.is_rational(&q))
            throw precondition_error("integer normal form needs rational coefficients");
        den_lcm = lcm(den_lcm, q.get_den());
    }
    for (const auto& [e, c] : f.terms()) {
        Rat q;
        c.is_rational(&q);
        num_gcd = gcd(num_gcd, Int(q.get_num() * (den_lcm / q.get_den())));
    }
    Rat scale = make_rat(den_lcm, num_gcd);
    Rat lead;
    f.terms().rbegin()->second.is_rational(&lead);
    if (sgn(lead) < 0) scale = -scale;
    LaurentPoly out = f * FieldElem::from_rat(t, scale);
    LaurentPoly shifted(t);
    long m = out.min_exp();
    for (const auto& [e, c] : out.terms()) shifted.add_term(e - m, c);
    return shifted;
}

TorsionOrderReport torsion_order_check(const Presentation& p, const H1Structure& h,
                                       const AlexanderSequence& untwisted) {
    TorsionOrderReport rep;
    rep.tors_order = h.torsion_order();
    if (p.nrels() == 0 || untwisted.deltas.empty() || untwisted.positive_rank) return rep;
    rep.skipped = false;
    const LaurentPoly delta = integer_normal_form(untwisted.deltas.front());
    FieldElem val = delta.evaluate(FieldElem::one(delta.tower()));
    Rat q;
    if (!val.is_rational(&q))
        throw internal_inconsistency("untwisted Delta(1) is not rational");
    rep.delta_at_one = q;
    rep.agrees = abs(q) == Rat(rep.tors_order);
    return rep;
}

} // namespace alexdef
