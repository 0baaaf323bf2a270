#include "test_util.hpp"

#include <doctest.h>

using namespace alexdef;
using namespace alexdef::testutil;

namespace {

FieldTower::Ptr C2() { return FieldTower::cyclotomic(2); }

LaurentMatrix from_exprs(std::vector<std::vector<std::string>> rows, const FieldTower::Ptr& t) {
    LaurentMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), t);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = parse_poly_expr(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], t);
    return m;
}

LaurentMatrix random_matrix(std::mt19937_64& gen, int rows, int cols, const FieldTower::Ptr& t) {
    LaurentMatrix m(rows, cols, t);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_laurent(gen, t, 2, 1, 3);
    return m;
}

bool is_unit_poly(const LaurentPoly& p) {
    return !p.is_zero() && p.terms().size() == 1;
}

void check_snf_r(const LaurentMatrix& a) {
    SmithDecompositionR s = smith_normal_form_laurent(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_unit_poly(laurent_det(s.u)));
    CHECK(is_unit_poly(laurent_det(s.v)));
    std::vector<LaurentPoly> diag = s.diagonal_ascending();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (!diag[i].is_zero())
            CHECK(divide_exact(diag[i + 1], diag[i]).has_value());
        else
            CHECK(diag[i + 1].is_zero());
    }
    for (const LaurentPoly& d : diag)
        if (!d.is_zero()) CHECK(d == d.normalize_unit().first);
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j).is_zero());
    // invariant-factor products match minors GCDs up to unit
    for (int order = 1; order <= std::min(a.rows(), a.cols()); ++order) {
        LaurentPoly prod = LaurentPoly::one(a.tower());
        for (int i = 0; i < order; ++i) prod *= diag[static_cast<std::size_t>(i)];
        LaurentPoly gcd = minors_gcd_serial(a, order);
        if (prod.is_zero())
            CHECK(gcd.is_zero());
        else
            CHECK(equal_up_to_unit(prod, gcd));
    }
}

} // namespace

TEST_CASE("determinants") {
    LaurentMatrix m = from_exprs({{"t-1", "-2"}, {"-2", "t-5"}}, C2());
    CHECK(laurent_det(m) == parse_poly_expr("t^2-6*t+1", C2()));
    CHECK(laurent_det(LaurentMatrix::identity(3, C2())).is_one());
    LaurentMatrix z(2, 2, C2());
    CHECK(laurent_det(z).is_zero());
}

TEST_CASE("minors gcd on the worked-example Jacobian") {
    LaurentMatrix j1 = from_exprs({{"0", "t-1", "-2"}, {"0", "-2", "t-5"}}, C2());
    CHECK(minors_gcd(j1, 2) == parse_poly_expr("t^2-6*t+1", C2()));
    LaurentMatrix j2 = from_exprs({{"0", "t-1", "0"}, {"2", "2", "t-1"}}, C2());
    CHECK(minors_gcd(j2, 2) == parse_poly_expr("t-1", C2()));
    CHECK(minors_gcd(j1, 0).is_one());
    CHECK(minors_gcd(LaurentMatrix::identity(2, C2()), 2).is_one());
    CHECK_THROWS_AS(minors_gcd(j1, 3), std::invalid_argument);
}

TEST_CASE("serial and parallel minors kernels agree") {
    auto r = rng();
    for (int iter = 0; iter < 12; ++iter) {
        std::uniform_int_distribution<int> dim(2, 5);
        int rows = dim(r), cols = dim(r);
        LaurentMatrix m = random_matrix(r, rows, cols, C2());
        for (int order = 1; order <= std::min(rows, cols); ++order) {
            LaurentPoly s = minors_gcd_serial(m, order);
            LaurentPoly p = minors_gcd_parallel(m, order);
            CHECK(s == p);
        }
    }
}

TEST_CASE("laurent smith normal form: worked-example Jacobian and edge cases") {
    LaurentMatrix j1 = from_exprs({{"0", "t-1", "-2"}, {"0", "-2", "t-5"}}, C2());
    SmithDecompositionR s = smith_normal_form_laurent(j1);
    check_snf_r(j1);
    LaurentPoly prod = LaurentPoly::one(C2());
    for (const LaurentPoly& d : s.diagonal_ascending()) prod *= d;
    CHECK(equal_up_to_unit(prod, parse_poly_expr("t^2-6*t+1", C2())));

    LaurentMatrix zero(2, 2, C2());
    SmithDecompositionR sz = smith_normal_form_laurent(zero);
    for (const LaurentPoly& d : sz.diagonal_ascending()) CHECK(d.is_zero());
    CHECK(sz.rank() == 0);

    LaurentMatrix one(1, 1, C2());
    one.at(0, 0) = parse_poly_expr("t-1", C2());
    SmithDecompositionR s1 = smith_normal_form_laurent(one);
    CHECK(s1.diagonal_ascending()[0] == parse_poly_expr("t-1", C2()));
    CHECK(s1.factors()[0] == parse_poly_expr("t-1", C2()));
}

TEST_CASE("factors are reported in descending divisibility order") {
    LaurentMatrix m(2, 3, C2());
    m.at(0, 0) = parse_poly_expr("t-1", C2());
    m.at(1, 1) = parse_poly_expr("(t-1)^2", C2());
    SmithDecompositionR s = smith_normal_form_laurent(m);
    std::vector<LaurentPoly> desc = s.factors();
    REQUIRE(desc.size() == 2);
    CHECK(divide_exact(desc[0], desc[1]).has_value()); // r_{i+1} | r_i
}

TEST_CASE("laurent smith normal form on random matrices") {
    auto r = rng();
    for (int iter = 0; iter < 10; ++iter) {
        std::uniform_int_distribution<int> dim(1, 4);
        LaurentMatrix m = random_matrix(r, dim(r), dim(r), C2());
        check_snf_r(m);
    }
}
