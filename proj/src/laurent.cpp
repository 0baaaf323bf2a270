#include "alexdef/laurent.hpp"

#include "alexdef/errors.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace alexdef {

std::string LaurentUnit::to_string() const {
    LaurentPoly u = LaurentPoly::monomial(a.tower(), a, n);
    return u.to_string();
}

LaurentPoly LaurentPoly::one(const FieldTower::Ptr& t) {
    return monomial(t, FieldElem::one(t), 0);
}

LaurentPoly LaurentPoly::monomial(const FieldTower::Ptr& t, const FieldElem& c, long exp) {
    LaurentPoly p(t);
    p.add_term(exp, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const FieldTower::Ptr& t, long exp) {
    return monomial(t, FieldElem::one(t), exp);
}

LaurentPoly LaurentPoly::from_rat(const FieldTower::Ptr& t, const Rat& q) {
    return monomial(t, FieldElem::from_rat(t, q), 0);
}

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

long LaurentPoly::min_exp() const {
    assert(!c_.empty());
    return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
    assert(!c_.empty());
    return c_.rbegin()->first;
}

FieldElem LaurentPoly::coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? FieldElem::zero(tower_) : it->second;
}

void LaurentPoly::add_term(long exp, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& r) const {
    LaurentPoly p = *this;
    for (const auto& [e, c] : r.c_) p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(tower_);
    for (const auto& [e, c] : c_) p.c_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& r) const { return *this + (-r); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& r) const {
    LaurentPoly p(tower_);
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : r.c_) p.add_term(e1 + e2, c1 * c2);
    return p;
}

LaurentPoly LaurentPoly::operator*(const FieldElem& c) const {
    LaurentPoly p(tower_);
    if (c.is_zero()) return p;
    for (const auto& [e, x] : c_) p.add_term(e, x * c);
    return p;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) {
        if (c_.size() != 1)
            throw precondition_error("negative power of a non-unit Laurent polynomial");
        const auto& [exp, c] = *c_.begin();
        return monomial(tower_, c.inv(), -exp).pow(-e);
    }
    LaurentPoly base = *this;
    LaurentPoly r = one(tower_);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::pair<LaurentPoly, LaurentUnit> LaurentPoly::normalize_unit() const {
    if (is_zero()) return {*this, LaurentUnit{FieldElem::one(tower_), 0}};
    long m = min_exp();
    FieldElem lead = c_.rbegin()->second;
    FieldElem lead_inv = lead.inv();
    LaurentPoly canon(tower_);
    for (const auto& [e, c] : c_) canon.c_.emplace(e - m, c * lead_inv);
    return {canon, LaurentUnit{lead, m}};
}

FieldElem LaurentPoly::evaluate(const FieldElem& z) const {
    FieldElem acc = FieldElem::zero(z.tower());
    if (is_zero()) return acc;
    if (min_exp() < 0 && z.is_zero()) throw precondition_error("evaluation point must be nonzero");
    for (const auto& [e, c] : c_) acc += c.lift_to(z.tower()) * z.pow(e);
    return acc;
}

LaurentPoly LaurentPoly::derivation_D() const {
    LaurentPoly p(tower_);
    for (const auto& [e, c] : c_)
        p.add_term(e, c * FieldElem::from_rat(tower_, Rat(static_cast<long>(e))));
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p(tower_);
    for (const auto& [e, c] : c_) p.c_.emplace(-e, c.conj());
    return p;
}

LaurentPoly LaurentPoly::subst_t_inv() const {
    LaurentPoly p(tower_);
    for (const auto& [e, c] : c_) p.c_.emplace(-e, c);
    return p;
}

LaurentPoly LaurentPoly::subst_scale(const FieldElem& a) const {
    LaurentPoly p(tower_);
    for (const auto& [e, c] : c_) p.add_term(e, c * a.pow(e));
    return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    auto ib = b.c_.begin();
    for (; ia != a.c_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    return a.normalize_unit().first == b.normalize_unit().first;
}

namespace {

// Dense ordinary-polynomial view (min_exp shifted away) used by divmod.
struct ShiftedPoly {
    long shift = 0;
    std::vector<FieldElem> c; // index = degree, trimmed

    static ShiftedPoly from(const LaurentPoly& p) {
        ShiftedPoly s;
        if (p.is_zero()) return s;
        s.shift = p.min_exp();
        s.c.assign(static_cast<std::size_t>(p.span()) + 1, FieldElem::zero(p.tower()));
        for (const auto& [e, x] : p.terms()) s.c[static_cast<std::size_t>(e - s.shift)] = x;
        return s;
    }

    LaurentPoly to_laurent(const FieldTower::Ptr& t) const {
        LaurentPoly p(t);
        for (std::size_t i = 0; i < c.size(); ++i)
            p.add_term(static_cast<long>(i) + shift, c[i]);
        return p;
    }
};

} // namespace

std::pair<LaurentPoly, LaurentPoly> laurent_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw precondition_error("division by the zero polynomial");
    const FieldTower::Ptr& t = a.tower();
    if (a.is_zero()) return {LaurentPoly::zero(t), LaurentPoly::zero(t)};
    ShiftedPoly pa = ShiftedPoly::from(a);
    ShiftedPoly pb = ShiftedPoly::from(b);
    FieldElem lead_inv = pb.c.back().inv();
    std::vector<FieldElem> quo(pa.c.size(), FieldElem::zero(t));
    std::vector<FieldElem> rem = pa.c;
    while (rem.size() >= pb.c.size()) {
        FieldElem f = rem.back() * lead_inv;
        std::size_t off = rem.size() - pb.c.size();
        if (!f.is_zero()) {
            quo[off] = f;
            for (std::size_t j = 0; j < pb.c.size(); ++j) rem[off + j] -= f * pb.c[j];
        }
        rem.pop_back();
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    LaurentPoly q(t), r(t);
    for (std::size_t i = 0; i < quo.size(); ++i)
        q.add_term(static_cast<long>(i) + pa.shift - pb.shift, quo[i]);
    for (std::size_t i = 0; i < rem.size(); ++i)
        r.add_term(static_cast<long>(i) + pa.shift, rem[i]);
    return {q, r};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = laurent_divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw precondition_error("gcd(0, 0) is undefined");
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = laurent_divmod(x, y);
        x = y;
        // remainders are only needed up to units; normalizing keeps the
        // coefficient sizes in the Euclid chain under control
        y = r.is_zero() ? r : r.normalize_unit().first;
    }
    return x.normalize_unit().first;
}

std::optional<long> root_multiplicity(const LaurentPoly& f, const LaurentPoly& minpoly) {
    if (minpoly.is_zero() || minpoly.min_exp() != 0 || minpoly.max_exp() < 1)
        throw precondition_error("minpoly must be an ordinary polynomial of degree >= 1");
    if (!minpoly.terms().rbegin()->second.is_one())
        throw precondition_error("minpoly must be monic");
    if (minpoly.coeff(0).is_zero())
        throw precondition_error("minpoly must have a unit constant term (z must be nonzero)");
    if (f.is_zero()) return std::nullopt;
    long k = 0;
    LaurentPoly g = f;
    for (;;) {
        std::optional<LaurentPoly> q = divide_exact(g, minpoly);
        if (!q) return k;
        g = *q;
        ++k;
    }
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long e = it->first;
        const FieldElem& c = it->second;
        Rat q;
        if (c.is_rational(&q)) {
            Rat aq = abs(q);
            if (first) {
                if (sgn(q) < 0) os << "-";
            } else {
                os << (sgn(q) < 0 ? "-" : "+");
            }
            if (aq != 1 || e == 0) os << rat_to_string(aq);
            if (e != 0) {
                if (aq != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        } else {
            if (!first) os << "+";
            os << "(" << c.to_string() << ")";
            if (e != 0) {
                os << "*t";
                if (e != 1) os << "^" << e;
            }
        }
        first = false;
    }
    return os.str();
}

} // namespace alexdef
