// Compares the serial reference and the OpenMP kernel for the minor
// enumeration behind Delta_k, on random Laurent matrices over Q(zeta_2).

#include "alexdef/laurent_matrix.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <tuple>

using namespace alexdef;

namespace {

// Entries share the factor t - 1, so the running gcd never collapses to 1
// and the full minor enumeration is exercised (the regime the kernel is for;
// with random dense entries the serial early exit wins immediately).
LaurentMatrix random_matrix(std::mt19937_64& rng, int rows, int cols,
                            const FieldTower::Ptr& tower) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<long> expo(-2, 2);
    std::uniform_int_distribution<int> nterms(1, 3);
    LaurentPoly common(tower);
    common.add_term(0, FieldElem::from_rat(tower, Rat(-1)));
    common.add_term(1, FieldElem::one(tower));
    LaurentMatrix m(rows, cols, tower);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            LaurentPoly p(tower);
            int k = nterms(rng);
            for (int l = 0; l < k; ++l)
                p.add_term(expo(rng), FieldElem::from_rat(tower, Rat(coeff(rng))));
            m.at(i, j) = p * common;
        }
    return m;
}

double time_ms(const std::function<LaurentPoly()>& f, LaurentPoly& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    unsigned long seed = 20260809;
    if (const char* env = std::getenv("ALEXDEF_SEED")) seed = std::strtoul(env, nullptr, 10);
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::mt19937_64 rng(seed);
    FieldTower::Ptr tower = FieldTower::cyclotomic(2);

    std::cout << "minors_gcd: serial reference vs OpenMP kernel (seed " << seed << ")\n";
    std::cout << "rows x cols  order   serial[ms]  parallel[ms]  speedup  equal\n";
    for (auto [rows, cols, order] : {std::tuple<int, int, int>{5, 6, 3},
                                     std::tuple<int, int, int>{6, 7, 4},
                                     std::tuple<int, int, int>{7, 8, 5}}) {
        double ser_total = 0.0, par_total = 0.0;
        bool equal = true;
        for (int r = 0; r < reps; ++r) {
            LaurentMatrix m = random_matrix(rng, rows, cols, tower);
            LaurentPoly gs(tower), gp(tower);
            ser_total += time_ms([&] { return minors_gcd_serial(m, order); }, gs);
            par_total += time_ms([&] { return minors_gcd_parallel(m, order); }, gp);
            equal = equal && gs == gp;
        }
        std::printf("%dx%d          %d      %10.2f  %12.2f  %7.2f  %s\n", rows, cols, order,
                    ser_total / reps, par_total / reps,
                    par_total > 0 ? ser_total / par_total : 0.0, equal ? "yes" : "NO");
        if (!equal) return 1;
    }
    return 0;
}
