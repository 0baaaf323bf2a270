#include "alexdef/homology.hpp"

#include "alexdef/errors.hpp"

namespace alexdef {

IntMatrix abelianized_matrix(const Presentation& p) {
    IntMatrix a(p.nrels(), p.ngens());
    for (int j = 0; j < p.nrels(); ++j) {
        std::vector<Int> v = p.relators[static_cast<std::size_t>(j)].exponent_vector(p.ngens());
        for (int i = 0; i < p.ngens(); ++i) a.at(j, i) = v[static_cast<std::size_t>(i)];
    }
    return a;
}

Int H1Structure::torsion_exponent() const {
    return torsion.empty() ? Int(1) : torsion.back();
}

Int H1Structure::torsion_order() const {
    Int o(1);
    for (const Int& d : torsion) o *= d;
    return o;
}

namespace {

std::vector<Int> canonical_coords(const SmithDecompositionZ& bc, const std::vector<Int>& v) {
    int n = bc.v.rows();
    std::vector<Int> c(static_cast<std::size_t>(n), Int(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(i)] * bc.v.at(i, j);
    return c;
}

} // namespace

std::vector<Int> H1Structure::torsion_part(const std::vector<Int>& v) const {
    std::vector<Int> c = canonical_coords(basis_change, v);
    std::vector<Int> t;
    t.reserve(torsion.size());
    for (std::size_t k = 0; k < torsion.size(); ++k)
        t.push_back(mod_floor(c[static_cast<std::size_t>(torsion_coords[k])], torsion[k]));
    return t;
}

std::vector<Int> H1Structure::free_part(const std::vector<Int>& v) const {
    std::vector<Int> c = canonical_coords(basis_change, v);
    std::vector<Int> f;
    f.reserve(free_coords.size());
    for (int idx : free_coords) f.push_back(c[static_cast<std::size_t>(idx)]);
    return f;
}

H1Structure h1_structure(const Presentation& p) {
    H1Structure h;
    h.ngens = p.ngens();
    h.basis_change = smith_normal_form_int(abelianized_matrix(p));
    int diag_len = std::min(p.nrels(), p.ngens());
    for (int j = 0; j < p.ngens(); ++j) {
        Int modulus = j < diag_len ? h.basis_change.d.at(j, j) : Int(0);
        if (sgn(modulus) == 0) {
            h.free_coords.push_back(j);
        } else if (modulus > 1) {
            h.torsion.push_back(modulus);
            h.torsion_coords.push_back(j);
        }
        // modulus 1: trivial summand, dropped
    }
    h.betti = static_cast<int>(h.free_coords.size());
    return h;
}

SplittingData canonical_splitting(const H1Structure& h) {
    if (h.betti != 1)
        throw precondition_error("not a rational homology circle (betti = " +
                                 std::to_string(h.betti) + ", need 1)");
    int f = h.free_coords[0];
    int r = static_cast<int>(h.torsion.size());
    SplittingData s;
    s.torsion = h.torsion;
    s.proj = IntMatrix(h.ngens, r);
    s.phi.reserve(static_cast<std::size_t>(h.ngens));
    for (int i = 0; i < h.ngens; ++i) {
        for (int k = 0; k < r; ++k)
            s.proj.at(i, k) =
                mod_floor(h.basis_change.v.at(i, h.torsion_coords[static_cast<std::size_t>(k)]),
                          h.torsion[static_cast<std::size_t>(k)]);
        s.phi.push_back(h.basis_change.v.at(i, f));
    }
    s.s_p_image.reserve(static_cast<std::size_t>(h.ngens));
    for (int i = 0; i < h.ngens; ++i) s.s_p_image.push_back(h.basis_change.v_inv.at(f, i));
    // Sign convention: phi positive on the first generator it does not kill.
    for (const Int& x : s.phi) {
        if (sgn(x) == 0) continue;
        if (sgn(x) < 0) {
            for (Int& y : s.phi) y = -y;
            for (Int& y : s.s_p_image) y = -y;
        }
        break;
    }
    return s;
}

SplittingData alternate_splitting(const H1Structure& h, const SplittingData& base,
                                  const std::vector<Int>& psi_of_one) {
    int r = base.torsion_rank();
    if (static_cast<int>(psi_of_one.size()) != r)
        throw precondition_error("psi(1) must have one coordinate per torsion factor");
    SplittingData s = base;
    for (int i = 0; i < s.ngens(); ++i)
        for (int k = 0; k < r; ++k)
            s.proj.at(i, k) = mod_floor(s.proj.at(i, k) + base.phi[static_cast<std::size_t>(i)] *
                                                              psi_of_one[static_cast<std::size_t>(k)],
                                        s.torsion[static_cast<std::size_t>(k)]);
    // s_p2(1) = s_p1(1) - lift(psi(1)); lift rows come from V^-1.
    for (int k = 0; k < r; ++k) {
        int coord = h.torsion_coords[static_cast<std::size_t>(k)];
        for (int i = 0; i < s.ngens(); ++i)
            s.s_p_image[static_cast<std::size_t>(i)] -=
                psi_of_one[static_cast<std::size_t>(k)] * h.basis_change.v_inv.at(coord, i);
    }
    return s;
}

SplittingData flip_phi(const SplittingData& base) {
    SplittingData s = base;
    for (Int& x : s.phi) x = -x;
    for (Int& x : s.s_p_image) x = -x;
    return s;
}

std::vector<Int> SplittingData::proj_of(const std::vector<Int>& v) const {
    std::vector<Int> t(static_cast<std::size_t>(torsion_rank()), Int(0));
    for (int k = 0; k < torsion_rank(); ++k) {
        for (int i = 0; i < ngens(); ++i) t[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(i)] * proj.at(i, k);
        t[static_cast<std::size_t>(k)] = mod_floor(t[static_cast<std::size_t>(k)], torsion[static_cast<std::size_t>(k)]);
    }
    return t;
}

Int SplittingData::phi_of(const std::vector<Int>& v) const {
    Int s(0);
    for (int i = 0; i < ngens(); ++i) s += v[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(i)];
    return s;
}

bool splitting_consistent(const H1Structure& h, const SplittingData& s) {
    // phi must hit 1 on s_p(1) and (s_p . phi + p)(e_i) must equal e_i in H1.
    if (s.phi_of(s.s_p_image) != 1) return false;
    for (int i = 0; i < h.ngens; ++i) {
        std::vector<Int> e(static_cast<std::size_t>(h.ngens), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        // candidate = phi(e_i) * s_p(1) + lift(p(e_i)), compared against e_i
        // through the canonical coordinates.
        std::vector<Int> cand(static_cast<std::size_t>(h.ngens), Int(0));
        for (int j = 0; j < h.ngens; ++j)
            cand[static_cast<std::size_t>(j)] = s.phi[static_cast<std::size_t>(i)] * s.s_p_image[static_cast<std::size_t>(j)];
        std::vector<Int> cand_t = h.torsion_part(cand);
        std::vector<Int> e_t = h.torsion_part(e);
        for (std::size_t k = 0; k < h.torsion.size(); ++k) {
            Int want = mod_floor(e_t[k] - s.proj.at(i, static_cast<int>(k)), h.torsion[k]);
            if (cand_t[k] != want) return false;
        }
        std::vector<Int> cand_f = h.free_part(cand);
        std::vector<Int> e_f = h.free_part(e);
        if (cand_f != e_f) return false;
    }
    return true;
}

} // namespace alexdef
