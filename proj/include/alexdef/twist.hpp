#pragma once

#include "alexdef/homology.hpp"
#include "alexdef/laurent_matrix.hpp"
#include "alexdef/words.hpp"

#include <optional>
#include <vector>

namespace alexdef {

/// phi_sigma: gamma |-> sigma(p(gamma)) t^phi(gamma). sigma is stored on the
/// SNF-canonical torsion generators as exponents of zeta_m, where m is the
/// exponent of the torsion subgroup; sigma(g_i) = zeta_m^e_i must have order
/// dividing d_i.
struct TwistSetup {
    SplittingData split;
    std::vector<Int> sigma_exp;
    FieldTower::Ptr field;

    bool sigma_trivial() const;
    /// sigma applied to a torsion element given in canonical coordinates.
    FieldElem sigma_of(const std::vector<Int>& torsion_coords) const;
};

/// Checks the homomorphism condition m | e_i d_i.
TwistSetup make_twist(const H1Structure& h, SplittingData split, std::vector<Int> sigma_exp);
TwistSetup trivial_twist(const H1Structure& h, SplittingData split);

/// Converts a prescription "sigma(p(S_j)) = zeta_m^{w_j}" on (a subset of)
/// the presentation generators into canonical-generator exponents by solving
/// the induced linear congruences mod m. Throws precondition_error when the
/// prescription is not a well-defined homomorphism on the torsion subgroup.
std::vector<Int> sigma_from_generator_values(const H1Structure& h, const SplittingData& split,
                                             const std::vector<std::pair<int, Int>>& prescribed);

/// phi_sigma applied to a single word / extended linearly to Z F_n.
LaurentPoly twist_word(const TwistSetup& tw, const FreeWord& w, int ngens);
LaurentPoly twist_polynomial(const IntGroupRing& e, const TwistSetup& tw, int ngens);

/// Fox Jacobian: entry (j,i) = phi_sigma(dR_j/dS_i), an nrels x ngens matrix
/// over K[t^+-1].
LaurentMatrix jacobian(const Presentation& p, const TwistSetup& tw);

/// Twisted Alexander polynomials Delta_k = gcd of the (n-k-1)-minors of the
/// Jacobian, unit-normalized. Indices beyond the stored list are 1.
struct AlexanderSequence {
    std::vector<LaurentPoly> deltas;
    bool positive_rank = false; ///< Delta_0 == 0: the Alexander module has nonzero rank

    const LaurentPoly& delta(int k) const;
    LaurentPoly one_poly;
};

/// Computes Delta_0 .. Delta_{up_to} (default: up to ngens-1). Every value is
/// cross-checked against the invariant-factor products of the Smith normal
/// form; a mismatch raises internal_inconsistency.
AlexanderSequence alexander_polynomials(const LaurentMatrix& jac, int up_to = -1);

struct SymmetryCheck {
    bool symmetric = false;
    LaurentUnit unit; ///< bar(d) = unit * d when symmetric
};

/// Tests bar(d) = epsilon d for a unit epsilon (d nonzero).
SymmetryCheck is_symmetric(const LaurentPoly& d);

/// Integer-primitive representative of a rational-coefficient Laurent
/// polynomial: content 1, positive leading coefficient, lowest exponent 0.
LaurentPoly integer_normal_form(const LaurentPoly& f);

/// |Delta(1)| vs |tors H1| diagnostic for the untwisted polynomial. Skipped
/// for presentations without relators; disagreement is flagged, not fatal.
struct TorsionOrderReport {
    bool skipped = true;
    Rat delta_at_one;
    Int tors_order;
    bool agrees = false;
};

TorsionOrderReport torsion_order_check(const Presentation& p, const H1Structure& h,
                                       const AlexanderSequence& untwisted);

} // namespace alexdef
