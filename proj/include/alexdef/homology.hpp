#pragma once

#include "alexdef/int_matrix.hpp"
#include "alexdef/words.hpp"

#include <vector>

namespace alexdef {

/// Exponent-sum matrix presenting H1: entry (j,i) is the total exponent of
/// generator i in relator j. H1 = Z^n / rowspace.
IntMatrix abelianized_matrix(const Presentation& p);

/// H1(M;Z) = Z/d_1 + ... + Z/d_r + Z^betti with d_i | d_i+1, together with
/// the unimodular change of basis: the canonical coordinates of a class given
/// by a generator-exponent row vector v are v * V.
struct H1Structure {
    std::vector<Int> torsion; ///< invariant factors > 1, divisibility order
    int betti = 0;
    SmithDecompositionZ basis_change;
    std::vector<int> torsion_coords; ///< canonical coordinate index per torsion factor
    std::vector<int> free_coords;    ///< canonical coordinate indices of the free part
    int ngens = 0;

    /// Exponent of the torsion subgroup (lcm of the invariant factors; 1 when
    /// torsion-free). Fixes the cyclotomic order downstream.
    Int torsion_exponent() const;
    Int torsion_order() const;

    /// Canonical coordinates of v (length ngens): torsion coordinates reduced
    /// into [0, d_i), then free coordinates.
    std::vector<Int> torsion_part(const std::vector<Int>& v) const;
    std::vector<Int> free_part(const std::vector<Int>& v) const;
};

H1Structure h1_structure(const Presentation& p);

/// A chosen isomorphism H1 = tors(H1) + Z: projection p onto the torsion
/// part, generator phi of hom(H1, Z), and the section s_p with
/// s_p . phi = Id - p.
struct SplittingData {
    std::vector<Int> torsion;     ///< copied moduli d_1..d_r
    IntMatrix proj;               ///< ngens x r: torsion coordinates of each generator class
    std::vector<Int> phi;         ///< phi(S_i) per generator
    std::vector<Int> s_p_image;   ///< generator-exponent vector representing s_p(1)

    int ngens() const { return proj.rows(); }
    int torsion_rank() const { return proj.cols(); }

    std::vector<Int> proj_of(const std::vector<Int>& v) const;
    Int phi_of(const std::vector<Int>& v) const;
};

/// The SNF-derived splitting. phi is sign-normalized so its first nonzero
/// value on a generator is positive. Requires betti == 1.
SplittingData canonical_splitting(const H1Structure& h);

/// The splitting with p2 = p1 + psi . phi for a torsion element psi(1) given
/// in canonical torsion coordinates (Eq. p2 = p1 + psi(phi(z))).
SplittingData alternate_splitting(const H1Structure& h, const SplittingData& base,
                                  const std::vector<Int>& psi_of_one);

/// Replaces phi by -phi; s_p(1) becomes its inverse class, p is unchanged.
SplittingData flip_phi(const SplittingData& s);

/// Checks s_p . phi = Id - p on every generator class.
bool splitting_consistent(const H1Structure& h, const SplittingData& s);

} // namespace alexdef
