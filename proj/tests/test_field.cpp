#include "alexdef/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace alexdef;
using namespace alexdef::testutil;

namespace {

std::vector<Rat> qpoly(std::vector<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return v;
}

FieldTower::Ptr golden_ratio_like_field() {
    // Q[s]/(s^2 - 6 s + 1)
    FieldTower::Ptr q = FieldTower::rationals();
    std::vector<FieldElem> minpoly{FieldElem::from_rat(q, Rat(1)),
                                   FieldElem::from_rat(q, Rat(-6)),
                                   FieldElem::from_rat(q, Rat(1))};
    return FieldTower::extend(q, minpoly, false);
}

FieldElem random_elem(std::mt19937_64& gen, const FieldTower::Ptr& t, int max_coeff = 10) {
    std::uniform_int_distribution<int> c(-max_coeff, max_coeff);
    std::vector<std::vector<Rat>> coords(static_cast<std::size_t>(t->ext_degree()),
                                         std::vector<Rat>(static_cast<std::size_t>(t->cyc_degree())));
    for (auto& level : coords)
        for (Rat& q : level) q = Rat(c(gen));
    return FieldElem::from_coords(t, coords);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == qpoly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == qpoly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == qpoly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == qpoly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == qpoly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == qpoly({1, 0, -1, 0, 1}));
}

TEST_CASE("zeta_2 is -1") {
    FieldTower::Ptr t = FieldTower::cyclotomic(2);
    FieldElem z = FieldElem::zeta(t, 1L);
    CHECK(z == FieldElem::from_rat(t, Rat(-1)));
    CHECK((z * z).is_one());
}

TEST_CASE("inverse in a quadratic extension") {
    FieldTower::Ptr t = golden_ratio_like_field();
    FieldElem s = FieldElem::ext_gen(t);
    // s * (6 - s) = 6s - s^2 = 6s - (6s - 1) = 1
    FieldElem expect = FieldElem::from_rat(t, Rat(6)) - s;
    CHECK(s.inv() == expect);
    CHECK((s * s.inv()).is_one());
    CHECK(s.to_string() == "s");
    CHECK(s.inv().to_string() == "-s+6");
}

TEST_CASE("conjugation") {
    FieldTower::Ptr t4 = FieldTower::cyclotomic(4);
    FieldElem z4 = FieldElem::zeta(t4, 1L);
    CHECK(z4.conj() == -z4);
    FieldElem e = FieldElem::one(t4) + z4;
    CHECK(e.conj() == FieldElem::one(t4) - z4);

    FieldTower::Ptr t6 = FieldTower::cyclotomic(6);
    CHECK(FieldElem::zeta(t6, 1L).conj() == FieldElem::zeta(t6, 5L));

    auto r = rng();
    for (int i = 0; i < 50; ++i) {
        FieldElem a = random_elem(r, t6), b = random_elem(r, t6);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }

    // extension level: error unless marked conjugation-stable
    FieldTower::Ptr ext = golden_ratio_like_field();
    CHECK_THROWS_AS(FieldElem::ext_gen(ext).conj(), precondition_error);
    FieldTower::Ptr q = FieldTower::rationals();
    std::vector<FieldElem> minpoly{FieldElem::from_rat(q, Rat(1)),
                                   FieldElem::from_rat(q, Rat(-6)),
                                   FieldElem::from_rat(q, Rat(1))};
    FieldTower::Ptr stable = FieldTower::extend(q, minpoly, true);
    CHECK(FieldElem::ext_gen(stable).conj() == FieldElem::ext_gen(stable));
}

TEST_CASE("field axioms at both tower levels") {
    auto r = rng();
    for (FieldTower::Ptr t : {FieldTower::cyclotomic(6), golden_ratio_like_field()}) {
        for (int i = 0; i < 40; ++i) {
            FieldElem a = random_elem(r, t), b = random_elem(r, t), c = random_elem(r, t);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("zero divisors and division by zero are detected") {
    FieldTower::Ptr q = FieldTower::rationals();
    // (s - 1)(s - 2): reducible
    std::vector<FieldElem> minpoly{FieldElem::from_rat(q, Rat(2)),
                                   FieldElem::from_rat(q, Rat(-3)),
                                   FieldElem::from_rat(q, Rat(1))};
    FieldTower::Ptr bad = FieldTower::extend(q, minpoly, false);
    FieldElem d = FieldElem::ext_gen(bad) - FieldElem::one(bad);
    CHECK_THROWS_AS(d.inv(), zero_divisor_error);
    CHECK_THROWS_AS(FieldElem::zero(bad).inv(), precondition_error);
}

TEST_CASE("powers and rationality") {
    FieldTower::Ptr t = golden_ratio_like_field();
    FieldElem s = FieldElem::ext_gen(t);
    CHECK(s.pow(0).is_one());
    CHECK(s.pow(2) == FieldElem::from_rat(t, Rat(6)) * s - FieldElem::one(t));
    CHECK(s.pow(-1) == s.inv());
    Rat out;
    CHECK_FALSE(s.is_rational(&out));
    CHECK(FieldElem::from_rat(t, Rat(7, 2)).is_rational(&out));
    CHECK(out == Rat(7, 2));
    CHECK(FieldElem::from_rat(t, Rat(3)).to_string() == "3");
}

TEST_CASE("lifting between towers") {
    FieldTower::Ptr cyc = FieldTower::cyclotomic(2);
    std::vector<FieldElem> minpoly{FieldElem::from_rat(cyc, Rat(1)),
                                   FieldElem::from_rat(cyc, Rat(-6)),
                                   FieldElem::from_rat(cyc, Rat(1))};
    FieldTower::Ptr ext = FieldTower::extend(cyc, minpoly, false);
    FieldElem z = FieldElem::zeta(cyc, 1L);
    FieldElem lifted = z.lift_to(ext);
    CHECK(lifted == FieldElem::from_rat(ext, Rat(-1)));
    CHECK_THROWS_AS(FieldElem::ext_gen(ext).lift_to(cyc), precondition_error);
}

TEST_CASE("extension construction guards") {
    FieldTower::Ptr q = FieldTower::rationals();
    // not monic
    std::vector<FieldElem> notmonic{FieldElem::from_rat(q, Rat(1)),
                                    FieldElem::from_rat(q, Rat(2))};
    CHECK_THROWS_AS(FieldTower::extend(q, notmonic, false), precondition_error);
    // zero constant term: z would not be invertible
    std::vector<FieldElem> zeroconst{FieldElem::zero(q), FieldElem::from_rat(q, Rat(-6)),
                                     FieldElem::from_rat(q, Rat(1))};
    CHECK_THROWS_AS(FieldTower::extend(q, zeroconst, false), precondition_error);
}
