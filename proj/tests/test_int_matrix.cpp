#include "test_util.hpp"

#include <doctest.h>

using namespace alexdef;
using namespace alexdef::testutil;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows, int cols) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

void check_snf(const IntMatrix& a) {
    SmithDecompositionZ s = smith_normal_form_int(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
    std::vector<Int> diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(sgn(diag[i]) >= 0);
        if (sgn(diag[i]) != 0)
            CHECK(sgn(mod_floor(diag[i + 1], diag[i])) == 0);
        else
            CHECK(sgn(diag[i + 1]) == 0);
    }
    // off-diagonal zero
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(sgn(s.d.at(i, j)) == 0);
}

} // namespace

TEST_CASE("smith normal form on the torus-bundle relation matrix") {
    IntMatrix a = from_rows({{0, 0, -2}, {0, -2, -4}}, 3);
    SmithDecompositionZ s = smith_normal_form_int(a);
    check_snf(a);
    CHECK(s.diagonal() == std::vector<Int>{Int(2), Int(2)});
    CHECK(s.rank() == 2);
}

TEST_CASE("smith normal form edge cases") {
    IntMatrix id = IntMatrix::identity(3);
    SmithDecompositionZ s = smith_normal_form_int(id);
    CHECK(s.d == id);
    check_snf(id);

    IntMatrix zero(2, 3);
    s = smith_normal_form_int(zero);
    CHECK(s.rank() == 0);
    check_snf(zero);

    IntMatrix empty(0, 1);
    s = smith_normal_form_int(empty);
    CHECK(s.diagonal().empty());
}

TEST_CASE("smith normal form on random matrices") {
    auto r = rng();
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<int> dim(1, 6);
        IntMatrix a = random_int_matrix(r, dim(r), dim(r));
        check_snf(a);
    }
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
    IntMatrix a = from_rows({{2, 1}, {7, 4}}, 2);
    CHECK(determinant(a) == 1);
    a = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3);
    CHECK(determinant(a) == 0);
    a = from_rows({{0, 2}, {3, 0}}, 2);
    CHECK(determinant(a) == -6);
}

TEST_CASE("integer linear solve") {
    IntMatrix a = from_rows({{2, 0}, {0, 3}}, 2);
    auto x = solve_integer(a, {Int(4), Int(9)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(solve_integer(a, {Int(1), Int(0)}).has_value());

    // underdetermined consistent system
    IntMatrix b = from_rows({{1, 2, 3}}, 3);
    auto y = solve_integer(b, {Int(7)});
    REQUIRE(y.has_value());
    Int acc = (*y)[0] + 2 * (*y)[1] + 3 * (*y)[2];
    CHECK(acc == 7);
}
