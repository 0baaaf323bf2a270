#include "alexdef/field.hpp"

#include "alexdef/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace alexdef {

namespace {

// ---- dense polynomial helpers over Q (index = degree, trimmed) ----

using QPoly = std::vector<Rat>;

void q_trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    q_trim(r);
    return r;
}

// a mod b and a div b, b nonzero
void q_divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    rem = a;
    q_trim(rem);
    quo.clear();
    if (rem.size() < b.size()) return;
    quo.assign(rem.size() - b.size() + 1, Rat(0));
    Rat lead_inv = Rat(1) / b.back();
    for (std::size_t i = rem.size(); i-- >= b.size();) {
        Rat f = rem[i] * lead_inv;
        if (sgn(f) != 0) {
            quo[i - b.size() + 1] = f;
            for (std::size_t j = 0; j < b.size(); ++j) rem[i - b.size() + 1 + j] -= f * b[j];
        }
        if (i == 0) break;
    }
    q_trim(rem);
    q_trim(quo);
}

QPoly q_mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    q_divmod(a, b, q, r);
    return r;
}

} // namespace

std::vector<Rat> cyclotomic_polynomial(unsigned m) {
    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
    QPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        QPoly q, r;
        q_divmod(num, cyclotomic_polynomial(d), q, r);
        assert(r.empty());
        num = q;
    }
    return num;
}

FieldTower::Ptr FieldTower::rationals() { return cyclotomic(1); }

FieldTower::Ptr FieldTower::cyclotomic(unsigned m) {
    if (m == 0) throw precondition_error("cyclotomic order must be >= 1");
    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->m_ = m;
    t->phi_ = cyclotomic_polynomial(m);
    t->zeta_pow_.reserve(m);
    int cdeg = static_cast<int>(t->phi_.size()) - 1;
    for (unsigned j = 0; j < m; ++j) {
        QPoly p(j + 1, Rat(0));
        p[j] = 1;
        p = q_mod(p, t->phi_);
        p.resize(static_cast<std::size_t>(cdeg), Rat(0));
        t->zeta_pow_.push_back(std::move(p));
    }
    return t;
}

FieldTower::Ptr FieldTower::extend(const Ptr& cyc, std::vector<FieldElem> minpoly,
                                   bool conj_stable) {
    if (cyc->has_extension())
        throw precondition_error("field tower supports a single extension level");
    if (minpoly.size() < 2) throw precondition_error("extension minpoly must have degree >= 1");
    auto t = std::shared_ptr<FieldTower>(new FieldTower(*cyc));
    for (FieldElem& c : minpoly) {
        if (!c.tower()->same_as(*cyc))
            throw precondition_error("minpoly coefficients must live at the cyclotomic level");
        t->ext_minpoly_.push_back(c.coords().at(0));
    }
    if (!(FieldElem::from_coords(cyc, {t->ext_minpoly_.back()}).is_one()))
        throw precondition_error("extension minpoly must be monic");
    if (FieldElem::from_coords(cyc, {t->ext_minpoly_.front()}).is_zero())
        throw precondition_error("extension minpoly must have unit constant term (z must be nonzero)");
    if (conj_stable) {
        for (const auto& c : t->ext_minpoly_) {
            FieldElem e = FieldElem::from_coords(cyc, {c});
            if (e.conj() != e)
                throw precondition_error(
                    "conjugation-stable extension requires a conjugation-invariant minpoly");
        }
    }
    t->ext_conj_stable_ = conj_stable;
    return t;
}

const std::vector<Rat>& FieldTower::zeta_power(long e) const {
    long r = e % static_cast<long>(m_);
    if (r < 0) r += static_cast<long>(m_);
    return zeta_pow_[static_cast<std::size_t>(r)];
}

std::vector<Rat> FieldTower::zeta_power(const Int& e) const {
    Int r = mod_floor(e, Int(m_));
    return zeta_pow_[r.get_ui()];
}

bool FieldTower::same_as(const FieldTower& o) const {
    if (this == &o) return true;
    return m_ == o.m_ && ext_minpoly_ == o.ext_minpoly_;
}

// ---- FieldElem ----

namespace {

using CycVec = std::vector<Rat>; // fixed length cyc_degree

CycVec cyc_zero(int cdeg) { return CycVec(static_cast<std::size_t>(cdeg), Rat(0)); }

CycVec cyc_one(const FieldTower& t) {
    CycVec v = cyc_zero(t.cyc_degree());
    v[0] = 1;
    return v;
}

bool cyc_is_zero(const CycVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return sgn(q) == 0; });
}

CycVec cyc_add(const CycVec& a, const CycVec& b) {
    CycVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

CycVec cyc_sub(const CycVec& a, const CycVec& b) {
    CycVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

CycVec cyc_neg(const CycVec& a) {
    CycVec r = a;
    for (Rat& q : r) q = -q;
    return r;
}

CycVec cyc_mul(const FieldTower& t, const CycVec& a, const CycVec& b) {
    QPoly pa(a.begin(), a.end()), pb(b.begin(), b.end());
    q_trim(pa);
    q_trim(pb);
    QPoly r = q_mod(q_mul(pa, pb), t.cyc_minpoly());
    r.resize(static_cast<std::size_t>(t.cyc_degree()), Rat(0));
    return r;
}

// Inverse modulo the cyclotomic polynomial (always exists: Phi_m is
// irreducible over Q and a != 0).
CycVec cyc_inv(const FieldTower& t, const CycVec& a) {
    QPoly r0(t.cyc_minpoly()), r1(a.begin(), a.end());
    q_trim(r1);
    assert(!r1.empty());
    QPoly s0{}, s1{Rat(1)}; // s_k with s_k * a = r_k (mod Phi)
    while (r1.size() > 1) {
        QPoly q, r2;
        q_divmod(r0, r1, q, r2);
        QPoly s2 = s0;
        QPoly qs1 = q_mul(q, s1);
        s2.resize(std::max(s2.size(), qs1.size()), Rat(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        q_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        assert(!r1.empty()); // gcd(a, Phi_m) = 1
    }
    Rat inv_lead = Rat(1) / r1[0];
    QPoly u = s1;
    for (Rat& q : u) q *= inv_lead;
    u = q_mod(u, t.cyc_minpoly());
    u.resize(static_cast<std::size_t>(t.cyc_degree()), Rat(0));
    return u;
}

std::string cyc_to_string(const CycVec& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.size(); i-- > 0;) {
        const Rat& q = a[i];
        if (sgn(q) == 0) continue;
        Rat aq = abs(q);
        if (first) {
            if (sgn(q) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(q) < 0 ? "-" : "+");
        }
        bool unit_coeff = aq == 1 && i > 0;
        if (!unit_coeff) os << rat_to_string(aq);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

int cyc_nterms(const CycVec& a) {
    int n = 0;
    for (const Rat& q : a)
        if (sgn(q) != 0) ++n;
    return n;
}

} // namespace

FieldElem FieldElem::zero(const FieldTower::Ptr& t) {
    FieldElem e;
    e.tower_ = t;
    e.c_.assign(static_cast<std::size_t>(t->ext_degree()), cyc_zero(t->cyc_degree()));
    return e;
}

FieldElem FieldElem::from_rat(const FieldTower::Ptr& t, const Rat& q) {
    FieldElem e = zero(t);
    e.c_[0][0] = q;
    return e;
}

FieldElem FieldElem::one(const FieldTower::Ptr& t) { return from_rat(t, Rat(1)); }

FieldElem FieldElem::zeta(const FieldTower::Ptr& t, long e) {
    FieldElem r = zero(t);
    r.c_[0] = t->zeta_power(e);
    return r;
}

FieldElem FieldElem::zeta(const FieldTower::Ptr& t, const Int& e) {
    FieldElem r = zero(t);
    r.c_[0] = t->zeta_power(e);
    return r;
}

FieldElem FieldElem::ext_gen(const FieldTower::Ptr& t) {
    if (!t->has_extension())
        throw precondition_error("tower has no extension level");
    FieldElem r = zero(t);
    r.c_[1][0] = 1;
    return r;
}

FieldElem FieldElem::from_coords(const FieldTower::Ptr& t,
                                 std::vector<std::vector<Rat>> coords) {
    FieldElem e = zero(t);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < coords[i].size(); ++j) e.c_[i][j] = coords[i][j];
    return e;
}

FieldElem FieldElem::operator+(const FieldElem& r) const {
    assert(tower_ && r.tower_ && tower_->same_as(*r.tower_));
    FieldElem e = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) e.c_[i] = cyc_add(c_[i], r.c_[i]);
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& r) const {
    assert(tower_ && r.tower_ && tower_->same_as(*r.tower_));
    FieldElem e = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) e.c_[i] = cyc_sub(c_[i], r.c_[i]);
    return e;
}

FieldElem FieldElem::operator-() const {
    FieldElem e = *this;
    for (auto& v : e.c_) v = cyc_neg(v);
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& r) const {
    assert(tower_ && r.tower_ && tower_->same_as(*r.tower_));
    const FieldTower& t = *tower_;
    int ed = t.ext_degree();
    std::vector<CycVec> conv(static_cast<std::size_t>(2 * ed - 1), cyc_zero(t.cyc_degree()));
    for (int i = 0; i < ed; ++i) {
        if (cyc_is_zero(c_[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j < ed; ++j) {
            if (cyc_is_zero(r.c_[static_cast<std::size_t>(j)])) continue;
            conv[static_cast<std::size_t>(i + j)] =
                cyc_add(conv[static_cast<std::size_t>(i + j)],
                        cyc_mul(t, c_[static_cast<std::size_t>(i)], r.c_[static_cast<std::size_t>(j)]));
        }
    }
    // reduce modulo the monic minpoly
    for (int i = 2 * ed - 2; i >= ed; --i) {
        CycVec lead = conv[static_cast<std::size_t>(i)];
        if (cyc_is_zero(lead)) continue;
        conv[static_cast<std::size_t>(i)] = cyc_zero(t.cyc_degree());
        for (int j = 0; j < ed; ++j)
            conv[static_cast<std::size_t>(i - ed + j)] =
                cyc_sub(conv[static_cast<std::size_t>(i - ed + j)],
                        cyc_mul(t, lead, t.ext_minpoly()[static_cast<std::size_t>(j)]));
    }
    FieldElem e = zero(tower_);
    for (int i = 0; i < ed; ++i) e.c_[static_cast<std::size_t>(i)] = conv[static_cast<std::size_t>(i)];
    return e;
}

namespace {

// Polynomial arithmetic in K_cyc[s] for the extension-level Euclid.
using EPoly = std::vector<CycVec>;

void e_trim(EPoly& p) {
    while (!p.empty() && cyc_is_zero(p.back())) p.pop_back();
}

void e_divmod(const FieldTower& t, const EPoly& a, const EPoly& b, EPoly& quo, EPoly& rem) {
    rem = a;
    e_trim(rem);
    quo.clear();
    if (rem.size() < b.size()) return;
    quo.assign(rem.size() - b.size() + 1, cyc_zero(t.cyc_degree()));
    CycVec lead_inv = cyc_inv(t, b.back());
    for (std::size_t i = rem.size(); i-- >= b.size();) {
        if (!cyc_is_zero(rem[i])) {
            CycVec f = cyc_mul(t, rem[i], lead_inv);
            quo[i - b.size() + 1] = f;
            for (std::size_t j = 0; j < b.size(); ++j)
                rem[i - b.size() + 1 + j] = cyc_sub(rem[i - b.size() + 1 + j], cyc_mul(t, f, b[j]));
        }
        if (i == 0) break;
    }
    e_trim(rem);
    e_trim(quo);
}

EPoly e_mul(const FieldTower& t, const EPoly& a, const EPoly& b) {
    if (a.empty() || b.empty()) return {};
    EPoly r(a.size() + b.size() - 1, cyc_zero(t.cyc_degree()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (cyc_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = cyc_add(r[i + j], cyc_mul(t, a[i], b[j]));
    }
    e_trim(r);
    return r;
}

std::string epoly_to_string(const EPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (cyc_is_zero(p[i])) continue;
        if (!first) os << "+";
        first = false;
        os << "(" << cyc_to_string(p[i]) << ")";
        if (i > 0) {
            os << "*s";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

FieldElem FieldElem::inv() const {
    assert(tower_);
    if (is_zero()) throw precondition_error("division by zero");
    const FieldTower& t = *tower_;
    if (!t.has_extension()) {
        FieldElem e = zero(tower_);
        e.c_[0] = cyc_inv(t, c_[0]);
        return e;
    }
    // extended Euclid in K_cyc[s] against the minpoly
    EPoly r0(t.ext_minpoly().begin(), t.ext_minpoly().end());
    EPoly r1(c_.begin(), c_.end());
    e_trim(r1);
    EPoly s0{}, s1{cyc_one(t)};
    while (r1.size() > 1) {
        EPoly q, r2;
        e_divmod(t, r0, r1, q, r2);
        EPoly qs1 = e_mul(t, q, s1);
        EPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()), cyc_zero(t.cyc_degree()));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = cyc_sub(s2[i], qs1[i]);
        e_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty())
            throw zero_divisor_error(epoly_to_string(r0));
    }
    CycVec lead_inv = cyc_inv(t, r1[0]);
    FieldElem e = zero(tower_);
    EPoly u = s1;
    for (CycVec& v : u) v = cyc_mul(t, v, lead_inv);
    EPoly q, rem;
    e_divmod(t, u, EPoly(t.ext_minpoly().begin(), t.ext_minpoly().end()), q, rem);
    for (std::size_t i = 0; i < rem.size(); ++i) e.c_[i] = rem[i];
    return e;
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem base = *this;
    FieldElem r = one(tower_);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

FieldElem FieldElem::pow(const Int& e) const {
    if (!e.fits_slong_p()) throw precondition_error("exponent out of range");
    return pow(e.get_si());
}

FieldElem FieldElem::conj() const {
    assert(tower_);
    const FieldTower& t = *tower_;
    auto conj_cyc = [&](const CycVec& a) {
        CycVec r = cyc_zero(t.cyc_degree());
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (sgn(a[j]) == 0) continue;
            const std::vector<Rat>& zp = t.zeta_power(-static_cast<long>(j));
            for (std::size_t k = 0; k < r.size(); ++k) r[k] += a[j] * zp[k];
        }
        return r;
    };
    if (t.has_extension()) {
        bool ext_part = false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!cyc_is_zero(c_[i])) ext_part = true;
        if (ext_part && !t.conj_stable())
            throw precondition_error(
                "conjugation requested on an extension level not marked conjugation-stable");
    }
    FieldElem e = *this;
    for (auto& v : e.c_) v = conj_cyc(v);
    return e;
}

bool FieldElem::is_zero() const {
    for (const auto& v : c_)
        if (!cyc_is_zero(v)) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (!tower_) return false;
    return *this == one(tower_);
}

bool FieldElem::is_rational(Rat* out) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if ((i > 0 || j > 0) && sgn(c_[i][j]) != 0) return false;
    if (out) *out = c_[0][0];
    return true;
}

FieldElem FieldElem::lift_to(const FieldTower::Ptr& bigger) const {
    assert(tower_);
    if (tower_->same_as(*bigger)) {
        FieldElem e = *this;
        e.tower_ = bigger;
        return e;
    }
    if (tower_->has_extension() || tower_->cyclotomic_order() != bigger->cyclotomic_order())
        throw precondition_error("element cannot be lifted into the requested tower");
    FieldElem e = zero(bigger);
    e.c_[0] = c_[0];
    return e;
}

std::string FieldElem::to_string() const {
    if (!tower_) return "<invalid>";
    if (!tower_->has_extension()) return cyc_to_string(c_[0]);
    std::vector<std::string> parts;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (cyc_is_zero(c_[i])) continue;
        std::string cs = cyc_to_string(c_[i]);
        if (i == 0) {
            parts.push_back(cs);
            continue;
        }
        std::string var = i == 1 ? "s" : "s^" + std::to_string(i);
        if (cs == "1")
            parts.push_back(var);
        else if (cs == "-1")
            parts.push_back("-" + var);
        else if (cyc_nterms(c_[i]) > 1)
            parts.push_back("(" + cs + ")*" + var);
        else
            parts.push_back(cs + "*" + var);
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += (parts[i][0] == '-' ? "" : "+") + parts[i];
    return out;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    assert(a.tower_ && b.tower_ && a.tower_->same_as(*b.tower_));
    return a.c_ == b.c_;
}

} // namespace alexdef
