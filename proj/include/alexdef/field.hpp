#pragma once

#include "alexdef/numbers.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace alexdef {

class FieldElem;

/// Monic polynomial over Q as dense coefficient vector, index = degree.
std::vector<Rat> cyclotomic_polynomial(unsigned m);

/// Tower descriptor: Q, then Q(zeta_m) modulo the m-th cyclotomic polynomial,
/// then optionally one simple extension K[s]/(minpoly) housing the evaluation
/// point. At most these two levels exist; descriptors are immutable and
/// shared read-only between elements (and threads).
class FieldTower {
public:
    using Ptr = std::shared_ptr<const FieldTower>;

    static Ptr rationals();
    static Ptr cyclotomic(unsigned m);

    /// Extends an unextended tower by a monic minimal polynomial with unit
    /// constant term, given as cyclotomic-level coefficients (constant
    /// first). Irreducibility is NOT checked here; inversions detect zero
    /// divisors instead. conj_stable marks the extension as closed under
    /// coefficient conjugation (requires a conjugation-invariant minpoly).
    static Ptr extend(const Ptr& cyc, std::vector<FieldElem> minpoly, bool conj_stable);

    unsigned cyclotomic_order() const { return m_; }
    int cyc_degree() const { return static_cast<int>(phi_.size()) - 1; }
    bool has_extension() const { return !ext_minpoly_.empty(); }
    int ext_degree() const {
        return has_extension() ? static_cast<int>(ext_minpoly_.size()) - 1 : 1;
    }
    int absolute_degree() const { return cyc_degree() * ext_degree(); }
    bool conj_stable() const { return ext_conj_stable_; }

    const std::vector<Rat>& cyc_minpoly() const { return phi_; }
    const std::vector<std::vector<Rat>>& ext_minpoly() const { return ext_minpoly_; }

    /// Coordinates of zeta^e reduced modulo the cyclotomic polynomial, any
    /// integer exponent.
    const std::vector<Rat>& zeta_power(long e) const;
    std::vector<Rat> zeta_power(const Int& e) const;

    bool same_as(const FieldTower& o) const;

private:
    FieldTower() = default;

    unsigned m_ = 1;
    std::vector<Rat> phi_;                        // cyclotomic minimal polynomial
    std::vector<std::vector<Rat>> zeta_pow_;      // zeta^j mod phi, j = 0..m-1
    std::vector<std::vector<Rat>> ext_minpoly_;   // coefficients as cyc vectors
    bool ext_conj_stable_ = false;
};

/// Element of a FieldTower in canonical reduced form: coords_[i][j] is the
/// coefficient of s^i zeta^j with i < ext_degree and j < cyc_degree.
/// Immutable value semantics; arithmetic is exact.
class FieldElem {
public:
    FieldElem() = default; ///< invalid placeholder, usable only as container filler

    static FieldElem zero(const FieldTower::Ptr& t);
    static FieldElem one(const FieldTower::Ptr& t);
    static FieldElem from_rat(const FieldTower::Ptr& t, const Rat& q);
    static FieldElem zeta(const FieldTower::Ptr& t, long e = 1);
    static FieldElem zeta(const FieldTower::Ptr& t, const Int& e);
    /// The extension generator s (the designated root of the minpoly).
    static FieldElem ext_gen(const FieldTower::Ptr& t);
    static FieldElem from_coords(const FieldTower::Ptr& t, std::vector<std::vector<Rat>> coords);

    bool valid() const { return tower_ != nullptr; }
    const FieldTower::Ptr& tower() const { return tower_; }
    const std::vector<std::vector<Rat>>& coords() const { return c_; }

    FieldElem operator+(const FieldElem& r) const;
    FieldElem operator-(const FieldElem& r) const;
    FieldElem operator*(const FieldElem& r) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& r) { return *this = *this + r; }
    FieldElem& operator-=(const FieldElem& r) { return *this = *this - r; }
    FieldElem& operator*=(const FieldElem& r) { return *this = *this * r; }

    /// Throws precondition_error on inv(0); zero_divisor_error when the
    /// user-supplied extension minpoly turns out reducible.
    FieldElem inv() const;
    FieldElem pow(long e) const;
    FieldElem pow(const Int& e) const;

    /// zeta |-> zeta^-1, identity on Q. On the extension level only defined
    /// when the tower is marked conjugation-stable.
    FieldElem conj() const;

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in Q; optionally yields the value.
    bool is_rational(Rat* out = nullptr) const;

    /// Reinterprets a cyclotomic-level element in an extension of the same
    /// cyclotomic level.
    FieldElem lift_to(const FieldTower::Ptr& bigger) const;

    std::string to_string() const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    FieldTower::Ptr tower_;
    std::vector<std::vector<Rat>> c_;
};

inline bool coeff_is_zero(const FieldElem& c) { return c.is_zero(); }

} // namespace alexdef
