#pragma once

#include "alexdef/field.hpp"

#include <map>
#include <optional>
#include <string>

namespace alexdef {

/// A unit a * t^n of K[t^+-1] (a != 0).
struct LaurentUnit {
    FieldElem a;
    long n = 0;

    std::string to_string() const;
};

/// Laurent polynomial over a FieldTower: finite map exponent -> nonzero
/// coefficient. The canonical unit-normal form has lowest exponent 0 and
/// leading coefficient 1.
class LaurentPoly {
public:
    LaurentPoly() = default; ///< invalid placeholder
    explicit LaurentPoly(FieldTower::Ptr tower) : tower_(std::move(tower)) {}

    static LaurentPoly zero(const FieldTower::Ptr& t) { return LaurentPoly(t); }
    static LaurentPoly one(const FieldTower::Ptr& t);
    static LaurentPoly monomial(const FieldTower::Ptr& t, const FieldElem& c, long exp);
    static LaurentPoly variable(const FieldTower::Ptr& t, long exp = 1);
    static LaurentPoly from_rat(const FieldTower::Ptr& t, const Rat& q);

    const FieldTower::Ptr& tower() const { return tower_; }
    bool valid() const { return tower_ != nullptr; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    long min_exp() const; ///< requires nonzero
    long max_exp() const; ///< requires nonzero
    /// max_exp - min_exp; Euclidean size of a nonzero element.
    long span() const { return max_exp() - min_exp(); }
    const std::map<long, FieldElem>& terms() const { return c_; }
    FieldElem coeff(long exp) const;

    void add_term(long exp, const FieldElem& c);

    LaurentPoly operator+(const LaurentPoly& r) const;
    LaurentPoly operator-(const LaurentPoly& r) const;
    LaurentPoly operator*(const LaurentPoly& r) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const FieldElem& c) const;
    LaurentPoly& operator+=(const LaurentPoly& r) { return *this = *this + r; }
    LaurentPoly& operator-=(const LaurentPoly& r) { return *this = *this - r; }
    LaurentPoly& operator*=(const LaurentPoly& r) { return *this = *this * r; }

    /// Negative exponents require a single-term (unit) base.
    LaurentPoly pow(long e) const;

    /// Canonical associate plus the unit u with *this = u * canonical.
    /// The zero polynomial returns (0, 1).
    std::pair<LaurentPoly, LaurentUnit> normalize_unit() const;

    /// Ring homomorphism t |-> z into z's tower; z must be invertible when
    /// negative exponents occur. Coefficients are lifted into z's tower.
    FieldElem evaluate(const FieldElem& z) const;

    /// D(sum c_i t^i) = sum c_i i t^i.
    LaurentPoly derivation_D() const;

    /// Coefficient conjugation combined with t |-> t^-1.
    LaurentPoly bar() const;
    /// t |-> t^-1 without touching coefficients.
    LaurentPoly subst_t_inv() const;
    /// t |-> a t.
    LaurentPoly subst_scale(const FieldElem& a) const;

    std::string to_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    FieldTower::Ptr tower_;
    std::map<long, FieldElem> c_;
};

/// True when a and b are equal up to a unit a*t^n.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

/// Euclidean division with |rem| measured by span: a = q*b + r, r == 0 or
/// span(r) < span(b). b must be nonzero.
std::pair<LaurentPoly, LaurentPoly> laurent_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient when b | a, nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Unit-normalized greatest common divisor; gcd(0, 0) is an error.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Largest k with minpoly^k | f (the order of vanishing of f at a root of an
/// irreducible minpoly); nullopt means infinity (f == 0). minpoly must be
/// monic, of degree >= 1, with lowest exponent 0 and unit constant term.
std::optional<long> root_multiplicity(const LaurentPoly& f, const LaurentPoly& minpoly);

} // namespace alexdef
