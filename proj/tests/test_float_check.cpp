#include "test_util.hpp"

#include <doctest.h>

#include "alexdef/float_check.hpp"

#include <complex>

using namespace alexdef;
using namespace alexdef::testutil;

TEST_CASE("embedding basics") {
    FieldTower::Ptr c4 = FieldTower::cyclotomic(4);
    Embedding em4(c4);
    CHECK(std::abs(em4(FieldElem::zeta(c4, 1L)) - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(em4(FieldElem::from_rat(c4, Rat(3))) - 3.0) < 1e-12);

    FieldTower::Ptr q = FieldTower::rationals();
    std::vector<FieldElem> minpoly{FieldElem::from_rat(q, Rat(1)),
                                   FieldElem::from_rat(q, Rat(-6)),
                                   FieldElem::from_rat(q, Rat(1))};
    FieldTower::Ptr ext = FieldTower::extend(q, minpoly, false);
    Embedding em(ext);
    // the designated root is the larger one, 3 + sqrt(8)
    CHECK(std::abs(em(FieldElem::ext_gen(ext)) - 5.8284271247461903) < 1e-9);
}

TEST_CASE("embedding is a ring homomorphism up to float tolerance") {
    FieldTower::Ptr c6 = FieldTower::cyclotomic(6);
    std::vector<FieldElem> minpoly{FieldElem::from_rat(c6, Rat(1)),
                                   FieldElem::from_rat(c6, Rat(-6)),
                                   FieldElem::from_rat(c6, Rat(1))};
    FieldTower::Ptr ext = FieldTower::extend(c6, minpoly, false);
    Embedding em(ext);
    auto r = rng();
    std::uniform_int_distribution<int> c(-1000, 1000);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::vector<Rat>> ca(2, std::vector<Rat>(2)), cb(2, std::vector<Rat>(2));
        for (auto& lvl : ca)
            for (Rat& q : lvl) q = Rat(c(r));
        for (auto& lvl : cb)
            for (Rat& q : lvl) q = Rat(c(r));
        FieldElem a = FieldElem::from_coords(ext, ca), b = FieldElem::from_coords(ext, cb);
        double scale = std::max(1.0, std::abs(em(a)) * std::abs(em(b)));
        CHECK(std::abs(em(a * b) - em(a) * em(b)) / scale < 1e-9);
        CHECK(std::abs(em(a + b) - (em(a) + em(b))) / scale < 1e-9);
    }
}

TEST_CASE("float rank matches exact rank on the paper example") {
    TorusBundle tb;
    TwistSetup tw = tb.twist(1);
    CharacterAlpha a = make_character(tw, parse_poly_expr("t^2-6*t+1", tw.field));
    FieldMatrix m = character_matrix(tb.pres, a);
    Embedding em(a.field_z);
    ComplexMatrix cm(static_cast<std::size_t>(m.rows()),
                     std::vector<std::complex<double>>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            cm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = em(m.at(i, j));
    CHECK(float_rank(cm, 1e-8) == 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("full float cross-check agrees on the example suite") {
    TorusBundle tb;
    for (int which = 1; which <= 4; ++which) {
        TwistSetup tw = tb.twist(which);
        CharacterAlpha a =
            make_character(tw, parse_poly_expr(which == 1 ? "t^2-6*t+1" : "t-1", tw.field));
        DeformabilityReport rep = deformability_verdict(tb.pres, tb.h1, a);
        FloatCheckReport fc = float_cross_check(tb.pres, tb.h1, a, rep);
        CHECK(fc.all_agree);
        CHECK(fc.items.size() >= 3);
    }
}
