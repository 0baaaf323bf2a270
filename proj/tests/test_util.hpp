#pragma once

#include "alexdef/analysis.hpp"
#include "alexdef/poly_expr.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace alexdef::testutil {

inline std::string data_path(const std::string& name) {
    return std::string(ALEXDEF_TEST_DATA) + "/" + name;
}

inline unsigned long seed() {
    if (const char* env = std::getenv("ALEXDEF_SEED")) return std::strtoul(env, nullptr, 10);
    return 20260809;
}

inline std::mt19937_64 rng() { return std::mt19937_64(seed()); }

inline FreeWord random_word(std::mt19937_64& gen, int ngens, long max_len) {
    std::uniform_int_distribution<long> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, ngens - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> raw;
    long l = len(gen);
    for (long i = 0; i < l; ++i) raw.push_back({pick(gen), sign(gen) ? 1L : -1L});
    return FreeWord::reduce(raw);
}

inline LaurentPoly random_laurent(std::mt19937_64& gen, const FieldTower::Ptr& tower,
                                  int max_terms = 3, long max_exp = 2, int max_coeff = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> zpow(0, static_cast<int>(tower->cyclotomic_order()) - 1);
    LaurentPoly p(tower);
    int k = nterms(gen);
    for (int i = 0; i < k; ++i) {
        FieldElem c = FieldElem::from_rat(tower, Rat(coeff(gen))) *
                      FieldElem::zeta(tower, static_cast<long>(zpow(gen)));
        p.add_term(expo(gen), c);
    }
    return p;
}

inline IntMatrix random_int_matrix(std::mt19937_64& gen, int rows, int cols, int max_abs = 9) {
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = entry(gen);
    return m;
}

/// The worked torus-bundle fixture shared across suites.
struct TorusBundle {
    Presentation pres;
    H1Structure h1;
    SplittingData split;

    TorusBundle() {
        pres = load_presentation(data_path("torus_bundle.pres"));
        h1 = h1_structure(pres);
        split = canonical_splitting(h1);
    }

    /// sigma_1..sigma_4 of the example: values on (alpha, beta) are
    /// (1,1), (1,-1), (-1,1), (-1,-1).
    TwistSetup twist(int which) const {
        std::vector<std::pair<int, Int>> prescribed;
        int a_exp = (which == 3 || which == 4) ? 1 : 0;
        int b_exp = (which == 2 || which == 4) ? 1 : 0;
        prescribed.emplace_back(1, Int(a_exp));
        prescribed.emplace_back(2, Int(b_exp));
        return make_twist(h1, split, sigma_from_generator_values(h1, split, prescribed));
    }
};

} // namespace alexdef::testutil
