#include "alexdef/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace alexdef;
using namespace alexdef::testutil;

namespace {

IntGroupRing ring_word(const FreeWord& w, long c = 1) {
    return IntGroupRing::word(w, Int(c));
}

FreeWord gen(int i, long e = 1) { return FreeWord::generator(i, e); }

} // namespace

TEST_CASE("free reduction") {
    std::vector<Letter> raw{{0, 1}, {0, -1}};
    CHECK(FreeWord::reduce(raw).is_identity());
    raw = {{0, 2}, {0, -1}};
    CHECK(FreeWord::reduce(raw) == gen(0));
    raw = {{0, 1}, {1, 0}, {1, 2}, {1, -2}, {0, 1}};
    CHECK(FreeWord::reduce(raw) == gen(0, 2));
    CHECK((gen(0) * gen(0).inverse()).is_identity());
}

TEST_CASE("word multiplication is associative and reduction idempotent") {
    auto r = rng();
    for (int i = 0; i < 200; ++i) {
        FreeWord a = random_word(r, 3, 8), b = random_word(r, 3, 8), c = random_word(r, 3, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(FreeWord::reduce(a.letters()) == a);
    }
}

TEST_CASE("fox derivative basics") {
    // d(S0 S1)/dS1 = S0
    IntGroupRing d = fox_derivative(gen(0) * gen(1), 1);
    CHECK(d == ring_word(gen(0)));
    // d(S0^-1)/dS0 = -S0^-1
    d = fox_derivative(gen(0, -1), 0);
    CHECK(d == ring_word(gen(0, -1), -1));
    // dS_i/dS_j = delta_ij
    CHECK(fox_derivative(gen(1), 1) == IntGroupRing::scalar(Int(1)));
    CHECK(fox_derivative(gen(1), 0).is_zero());
}

TEST_CASE("fox derivative of powers matches letter-by-letter expansion") {
    auto r = rng();
    for (int i = 0; i < 100; ++i) {
        FreeWord w = random_word(r, 2, 10);
        std::vector<Letter> flat;
        for (const Letter& l : w.letters())
            for (long j = 0; j < (l.exp < 0 ? -l.exp : l.exp); ++j)
                flat.push_back({l.gen, l.exp < 0 ? -1L : 1L});
        FreeWord expanded = FreeWord::reduce(flat);
        REQUIRE(expanded == w);
        for (int g = 0; g < 2; ++g) CHECK(fox_derivative(w, g) == fox_derivative(expanded, g));
    }
}

TEST_CASE("product rule on random pairs") {
    auto r = rng();
    for (int i = 0; i < 100; ++i) {
        FreeWord u = random_word(r, 3, 8), v = random_word(r, 3, 8);
        for (int g = 0; g < 3; ++g) {
            IntGroupRing lhs = fox_derivative(u * v, g);
            IntGroupRing rhs = fox_derivative(u, g) + ring_word(u) * fox_derivative(v, g);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fundamental formula of the Fox calculus") {
    auto r = rng();
    for (int i = 0; i < 300; ++i) {
        FreeWord w = random_word(r, 3, 30);
        IntGroupRing sum;
        for (int g = 0; g < 3; ++g)
            sum += fox_derivative(w, g) * (ring_word(gen(g)) - IntGroupRing::scalar(Int(1)));
        CHECK(sum == ring_word(w) - IntGroupRing::scalar(Int(1)));
    }
}

TEST_CASE("fox derivative is linear over group-ring sums") {
    auto r = rng();
    for (int i = 0; i < 50; ++i) {
        IntGroupRing e = ring_word(random_word(r, 2, 6), 2) - ring_word(random_word(r, 2, 6), 3);
        IntGroupRing f = ring_word(random_word(r, 2, 6));
        for (int g = 0; g < 2; ++g)
            CHECK(fox_derivative(e + f, g) == fox_derivative(e, g) + fox_derivative(f, g));
    }
}

TEST_CASE("presentation parsing") {
    Presentation p = parse_presentation("gens: m a b\nrels: m a m^-1 b^-2 a^-1");
    CHECK(p.ngens() == 3);
    CHECK(p.nrels() == 1);
    CHECK(p.deficiency() == 2);
    FreeWord r1 = gen(0) * gen(1) * gen(0, -1) * gen(2, -2) * gen(1, -1);
    CHECK(p.relators[0] == r1);

    // torus bundle file: generator order preserved, both relators reduced
    Presentation tb = load_presentation(data_path("torus_bundle.pres"));
    CHECK(tb.ngens() == 3);
    CHECK(tb.nrels() == 2);
    CHECK(tb.generator_names == std::vector<std::string>{"m", "a", "b"});
    CHECK(tb.relators[0] == r1);
    FreeWord r2 = gen(0) * gen(2) * gen(0, -1) * gen(2, -2) * gen(1, -1) * gen(2, -2) *
                  gen(1, -1) * gen(2, -1);
    CHECK(tb.relators[1] == r2);
    CHECK(tb.word_to_string(tb.relators[0]) == "m a m^-1 b^-2 a^-1");
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_presentation("gens: x\nrels: y"), parse_error);
    try {
        parse_presentation("gens: x\nrels: y");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 7);
    }
    CHECK_THROWS_AS(parse_presentation("rels: x"), parse_error);
    CHECK_THROWS_AS(parse_presentation("gens: x y\nrels: x^"), parse_error);
    CHECK_THROWS_AS(parse_presentation("gens: x x\nrels:"), parse_error);
    CHECK_THROWS_AS(parse_presentation("gens: x"), parse_error);
    CHECK_THROWS_AS(parse_presentation(""), parse_error);
    // comments and blank lines are fine
    Presentation p = parse_presentation("# c\n\ngens: x # names\nrels:\n\n# done\nx x\n");
    CHECK(p.nrels() == 1);
    CHECK(p.relators[0] == gen(0, 2));
}
