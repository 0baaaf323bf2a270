#include "alexdef/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace alexdef;
using namespace alexdef::testutil;

TEST_CASE("abelianized matrix") {
    Presentation tb = load_presentation(data_path("torus_bundle.pres"));
    IntMatrix a = abelianized_matrix(tb);
    // columns (m, a, b): exponent sums of the two relators
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 3);
    long expect[2][3] = {{0, 0, -2}, {0, -2, -4}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a.at(i, j) == expect[i][j]);

    Presentation free1 = load_presentation(data_path("circle.pres"));
    IntMatrix f = abelianized_matrix(free1);
    CHECK(f.rows() == 0);
    CHECK(f.cols() == 1);

    Presentation sq = parse_presentation("gens: x\nrels: x x");
    IntMatrix s = abelianized_matrix(sq);
    CHECK(s.at(0, 0) == 2);
}

TEST_CASE("h1 structure") {
    TorusBundle tb;
    CHECK(tb.h1.torsion == std::vector<Int>{Int(2), Int(2)});
    CHECK(tb.h1.betti == 1);
    CHECK(tb.h1.torsion_exponent() == 2);
    CHECK(tb.h1.torsion_order() == 4);

    H1Structure free1 = h1_structure(load_presentation(data_path("circle.pres")));
    CHECK(free1.torsion.empty());
    CHECK(free1.betti == 1);
    CHECK(free1.torsion_exponent() == 1);

    H1Structure z2 = h1_structure(load_presentation(data_path("z2.pres")));
    CHECK(z2.torsion == std::vector<Int>{Int(2)});
    CHECK(z2.betti == 0);
}

TEST_CASE("canonical splitting on the torus bundle") {
    TorusBundle tb;
    const SplittingData& s = tb.split;
    // phi(m) = 1, phi(a) = phi(b) = 0
    CHECK(s.phi == std::vector<Int>{Int(1), Int(0), Int(0)});
    // p(m) = 0; p fixes the torsion classes of a and b
    for (int k = 0; k < s.torsion_rank(); ++k) CHECK(sgn(s.proj.at(0, k)) == 0);
    std::vector<Int> ea{Int(0), Int(1), Int(0)}, eb{Int(0), Int(0), Int(1)};
    CHECK(s.proj_of(ea) == tb.h1.torsion_part(ea));
    CHECK(s.proj_of(eb) == tb.h1.torsion_part(eb));
    // s_p(1) = m
    CHECK(s.s_p_image == std::vector<Int>{Int(1), Int(0), Int(0)});
    CHECK(splitting_consistent(tb.h1, s));
}

TEST_CASE("canonical splitting on the free group of rank one") {
    H1Structure h = h1_structure(load_presentation(data_path("circle.pres")));
    SplittingData s = canonical_splitting(h);
    CHECK(s.phi == std::vector<Int>{Int(1)});
    CHECK(s.torsion_rank() == 0);
    CHECK(s.s_p_image == std::vector<Int>{Int(1)});
    CHECK(splitting_consistent(h, s));
}

TEST_CASE("betti != 1 is rejected") {
    H1Structure h = h1_structure(load_presentation(data_path("z2.pres")));
    CHECK_THROWS_AS(canonical_splitting(h), precondition_error);
    H1Structure h2 = h1_structure(parse_presentation("gens: x y\nrels:"));
    CHECK(h2.betti == 2);
    CHECK_THROWS_AS(canonical_splitting(h2), precondition_error);
}

TEST_CASE("alternate splittings satisfy s_p . phi = Id - p") {
    TorusBundle tb;
    for (long c1 = 0; c1 < 2; ++c1)
        for (long c2 = 0; c2 < 2; ++c2) {
            std::vector<Int> psi{Int(c1), Int(c2)};
            SplittingData alt = alternate_splitting(tb.h1, tb.split, psi);
            CHECK(splitting_consistent(tb.h1, alt));
            CHECK(alt.phi == tb.split.phi);
            if (c1 == 0 && c2 == 0) {
                CHECK(alt.proj == tb.split.proj);
                CHECK(alt.s_p_image == tb.split.s_p_image);
            }
        }
    // psi(1) = class of a: p2(m) = p1(m) + psi(phi(m)) = torsion part of a
    std::vector<Int> ea{Int(0), Int(1), Int(0)};
    std::vector<Int> psi_a = tb.h1.torsion_part(ea);
    SplittingData alt = alternate_splitting(tb.h1, tb.split, psi_a);
    std::vector<Int> em{Int(1), Int(0), Int(0)};
    CHECK(alt.proj_of(em) == psi_a);
    CHECK_THROWS_AS(alternate_splitting(tb.h1, tb.split, std::vector<Int>{Int(1)}),
                    precondition_error);
}

TEST_CASE("flipping phi inverts s_p(1)") {
    TorusBundle tb;
    SplittingData f = flip_phi(tb.split);
    CHECK(f.phi == std::vector<Int>{Int(-1), Int(0), Int(0)});
    CHECK(f.s_p_image == std::vector<Int>{Int(-1), Int(0), Int(0)});
    CHECK(splitting_consistent(tb.h1, f));
}
