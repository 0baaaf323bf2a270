#pragma once

#include "alexdef/field_linalg.hpp"
#include "alexdef/twist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alexdef {

/// A diagonal character alpha = beta_z . phi_sigma: sigma on the torsion part
/// plus the evaluation point z = alpha(s_p(1)), an invertible algebraic
/// number given by a monic minimal polynomial over the cyclotomic level.
/// `negative` selects the alpha^- variant, gamma |-> alpha(gamma)^-1.
struct CharacterAlpha {
    TwistSetup tw;
    FieldTower::Ptr field_z;
    FieldElem z;
    LaurentPoly z_minpoly;
    bool negative = false;

    int sign() const { return negative ? -1 : 1; }
    CharacterAlpha flipped() const;
    /// alpha is trivial iff sigma is trivial and z = 1.
    bool is_trivial() const;
    /// The twist with sigma^sign, whose Jacobian evaluated at effective_z()
    /// gives the character matrix of this character.
    TwistSetup effective_twist(const H1Structure& h) const;
    FieldElem effective_z() const;
};

/// Builds alpha from a twist and the minimal polynomial of z (monic, degree
/// >= 1, unit constant term; coefficients at the cyclotomic level). Degree 1
/// keeps z at the cyclotomic level, higher degrees extend the tower.
CharacterAlpha make_character(TwistSetup tw, const LaurentPoly& z_minpoly,
                              bool conj_stable = false);

FieldElem evaluate_character(const CharacterAlpha& a, const FreeWord& w, int ngens);
/// Linear extension to the group ring.
FieldElem evaluate_character(const CharacterAlpha& a, const IntGroupRing& e, int ngens);

/// A_ji = alpha(dR_j/dS_i) over K_z; Z^1(Gamma; C_alpha) is its kernel.
FieldMatrix character_matrix(const Presentation& p, const CharacterAlpha& a);

/// (alpha(S_1) - 1, ..., alpha(S_n) - 1): spans the coboundaries.
std::vector<FieldElem> coboundary_vector(const Presentation& p, const CharacterAlpha& a);

/// dim H^1(Gamma; C_alpha) = n - rk A - 1. Requires alpha nontrivial.
int dim_h1(const Presentation& p, const CharacterAlpha& a);

/// Order of vanishing of delta0 at z (multiplicity of the minimal
/// polynomial); nullopt = infinity (delta0 == 0). Defined for the positive
/// variant whose twist produced delta0.
std::optional<long> zero_order(const CharacterAlpha& a, const LaurentPoly& delta0);

/// Values of a 1-cocycle on the generators, with the module it lives in.
enum class ModuleTag { CPlus, CMinus, CZero };

struct CocycleVec {
    std::vector<FieldElem> values;
    ModuleTag module_tag = ModuleTag::CPlus;
};

/// Deterministic generator of H^1: the kernel vector of the character matrix
/// with the coboundary pivot coordinate zeroed and the first nonzero
/// coordinate normalized to 1. Requires dim_h1 == 1.
CocycleVec cocycle_generator(const Presentation& p, const CharacterAlpha& a);

/// Cocycle rule d(g1 g2) = d(g1) + alpha(g1) d(g2) extended over a word.
FieldElem cocycle_eval(const CocycleVec& d, const CharacterAlpha& a, const FreeWord& w,
                       int ngens);

/// 1-cochain valued in C_{alpha^eps} (eps = 0: trivial module, i.e. a
/// homomorphism to (C,+)), given by its values on generators.
struct OneCochain {
    int eps = 0;
    std::vector<FieldElem> gen_values;
};

OneCochain phi_cochain(const Presentation& p, const CharacterAlpha& a,
                       const FieldElem& scale);
OneCochain cocycle_cochain(const CocycleVec& d, const CharacterAlpha& a);

FieldElem cochain_eval(const OneCochain& u, const CharacterAlpha& a, const FreeWord& w,
                       int ngens);

/// Normalized 2-cocycle presented as a finite sum of scaled cup products
/// coeff * (u cup v); all terms must target the same module C_{alpha^eps}.
struct TwoCocycle {
    struct Term {
        FieldElem coeff;
        OneCochain u, v;
    };
    std::vector<Term> terms;

    int total_eps() const;
    FieldElem eval(const CharacterAlpha& a, const FreeWord& g1, const FreeWord& g2,
                   int ngens) const;
};

struct ObstructionResult {
    bool solvable = false;
    std::vector<FieldElem> witness;     ///< the a_i solving the coboundary system
    std::vector<FieldElem> certificate; ///< row combination proving unsolvability
};

/// Coboundary criterion for a normalized 2-cocycle: c is a coboundary iff
/// sum_i alpha(dR_j/dS_i) a_i + sum_i c(dR_j/dS_i, S_i) = 0 has a solution.
ObstructionResult two_cocycle_is_coboundary(const Presentation& p, const CharacterAlpha& a,
                                            const TwoCocycle& c);

/// Solvability of J(z) x + a (DJ)(z) (d+(S_1) ... d+(S_n))^T = 0 with a = 1
/// (solvability does not depend on a != 0). Internally cross-checked against
/// the generic coboundary criterion applied to phi cup d+; disagreement
/// raises internal_inconsistency. Unsolvable means the cup-product
/// obstruction class is nonzero.
ObstructionResult cup_obstruction(const Presentation& p, const H1Structure& h,
                                  const CharacterAlpha& a, const CocycleVec& dplus);

/// Coordinates of a cohomology class in the basis (d_0, d_+, d_-).
struct QuadConePoint {
    FieldElem a0, aplus, aminus;
};

/// Quadratic cone condition a0 a+ = a0 a- = 0.
bool quadratic_cone_membership(const QuadConePoint& q);

enum class Verdict {
    NotAZeroRigid,
    SimpleZeroDeformable,
    HigherOrderInconclusive,
    PositiveRankNA,
    TrivialAlpha,
};

std::string verdict_name(Verdict v);

struct DeformabilityReport {
    Verdict verdict = Verdict::TrivialAlpha;
    std::optional<long> zero_ord;          ///< nullopt = infinity
    std::optional<int> dim_h1_plus;
    std::optional<int> dim_h1_minus;
    std::optional<bool> obstruction_solvable;
    AlexanderSequence alex;
    bool delta_symmetric = false;
    std::vector<int> component_dims;
    bool transverse = false;
    TorsionOrderReport torsion_check; ///< untwisted-only diagnostic; skipped otherwise
};

/// Branches per the zero order of alpha: trivial alpha, positive-rank module,
/// no zero (rigid), simple zero (deformable; dim H^1 and the cup obstruction
/// are verified and any violated structural law raises internal_inconsistency), or
/// higher-order zero (diagnostics only).
DeformabilityReport deformability_verdict(const Presentation& p, const H1Structure& h,
                                          const CharacterAlpha& a);

} // namespace alexdef
