#include "alexdef/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace alexdef;
using namespace alexdef::testutil;

namespace {

FieldTower::Ptr ext_tower() {
    FieldTower::Ptr c2 = FieldTower::cyclotomic(2);
    std::vector<FieldElem> minpoly{FieldElem::from_rat(c2, Rat(1)),
                                   FieldElem::from_rat(c2, Rat(-6)),
                                   FieldElem::from_rat(c2, Rat(1))};
    return FieldTower::extend(c2, minpoly, false);
}

// J^{phi sigma_1}(z) for z^2 = 6z - 1
FieldMatrix paper_matrix(const FieldTower::Ptr& t) {
    FieldElem z = FieldElem::ext_gen(t);
    FieldElem one = FieldElem::one(t);
    FieldMatrix m(2, 3, t);
    m.at(0, 1) = z - one;
    m.at(0, 2) = FieldElem::from_rat(t, Rat(-2));
    m.at(1, 1) = FieldElem::from_rat(t, Rat(-2));
    m.at(1, 2) = z - FieldElem::from_rat(t, Rat(5));
    return m;
}

} // namespace

TEST_CASE("rank and kernel of the evaluated Jacobian") {
    FieldTower::Ptr t = ext_tower();
    FieldMatrix m = paper_matrix(t);
    CHECK(rank(m) == 1); // rows proportional: (z-1)(z-5) = 4
    std::vector<std::vector<FieldElem>> ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    FieldElem z = FieldElem::ext_gen(t);
    // both spec kernel vectors lie in the kernel
    std::vector<FieldElem> v1{FieldElem::one(t), FieldElem::zero(t), FieldElem::zero(t)};
    std::vector<FieldElem> v2{FieldElem::zero(t), FieldElem::from_rat(t, Rat(2)),
                              z - FieldElem::one(t)};
    for (const auto& v : {v1, v2})
        for (const FieldElem& y : m.apply(v)) CHECK(y.is_zero());
    // kernel basis vectors solve the system too
    for (const auto& v : ker)
        for (const FieldElem& y : m.apply(v)) CHECK(y.is_zero());
}

TEST_CASE("solve with identity") {
    FieldTower::Ptr t = FieldTower::cyclotomic(2);
    FieldMatrix id = FieldMatrix::identity(3, t);
    std::vector<FieldElem> b{FieldElem::from_rat(t, Rat(1)), FieldElem::from_rat(t, Rat(-2)),
                             FieldElem::zeta(t, 1L)};
    LinearSolveOutcome out = linear_solve(id, b);
    REQUIRE(out.solvable);
    CHECK(out.solution == b);
    CHECK(out.kernel.empty());
    CHECK(out.rank == 3);
}

TEST_CASE("unsolvable systems produce a verifiable certificate") {
    FieldTower::Ptr t = FieldTower::cyclotomic(2);
    // x + y = 1, x + y = 2
    FieldMatrix m(2, 2, t);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = FieldElem::one(t);
    std::vector<FieldElem> b{FieldElem::one(t), FieldElem::from_rat(t, Rat(2))};
    LinearSolveOutcome out = linear_solve(m, b);
    REQUIRE_FALSE(out.solvable);
    REQUIRE(out.certificate.size() == 2);
    // y^T A = 0 and y^T b != 0
    for (int j = 0; j < 2; ++j) {
        FieldElem acc = FieldElem::zero(t);
        for (int i = 0; i < 2; ++i) acc += out.certificate[static_cast<std::size_t>(i)] * m.at(i, j);
        CHECK(acc.is_zero());
    }
    FieldElem dot = FieldElem::zero(t);
    for (int i = 0; i < 2; ++i) dot += out.certificate[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    CHECK_FALSE(dot.is_zero());
}

TEST_CASE("random square systems: solution check") {
    auto r = rng();
    FieldTower::Ptr t = FieldTower::cyclotomic(2);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int iter = 0; iter < 30; ++iter) {
        FieldMatrix m(3, 3, t);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = FieldElem::from_rat(t, Rat(c(r)));
        std::vector<FieldElem> b;
        for (int i = 0; i < 3; ++i) b.push_back(FieldElem::from_rat(t, Rat(c(r))));
        LinearSolveOutcome out = linear_solve(m, b);
        if (out.solvable) {
            std::vector<FieldElem> y = m.apply(out.solution);
            for (int i = 0; i < 3; ++i) CHECK(y[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]);
            // adding any kernel vector keeps it a solution
            for (const auto& k : out.kernel) {
                std::vector<FieldElem> x2 = out.solution;
                for (std::size_t i = 0; i < x2.size(); ++i) x2[i] += k[i];
                std::vector<FieldElem> y2 = m.apply(x2);
                for (int i = 0; i < 3; ++i) CHECK(y2[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]);
            }
        }
        CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == 3);
    }
}

TEST_CASE("zero-divisor propagation through elimination") {
    FieldTower::Ptr q = FieldTower::rationals();
    std::vector<FieldElem> minpoly{FieldElem::from_rat(q, Rat(2)),
                                   FieldElem::from_rat(q, Rat(-3)),
                                   FieldElem::from_rat(q, Rat(1))};
    FieldTower::Ptr bad = FieldTower::extend(q, minpoly, false);
    FieldMatrix m(1, 1, bad);
    m.at(0, 0) = FieldElem::ext_gen(bad) - FieldElem::one(bad); // zero divisor pivot
    CHECK_THROWS_AS(rank(m), zero_divisor_error);
}
