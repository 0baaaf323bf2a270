#pragma once

#include "alexdef/deformation.hpp"

#include <complex>
#include <string>
#include <vector>

namespace alexdef {

/// Numeric embedding of a FieldTower into C: zeta_m |-> e^(2 pi i / m) and
/// the extension generator to a designated root of the embedded minpoly (the
/// root of largest modulus, ties broken by real then imaginary part).
class Embedding {
public:
    explicit Embedding(FieldTower::Ptr tower);

    std::complex<double> operator()(const FieldElem& e) const;
    std::complex<double> zeta() const { return zeta_; }
    std::complex<double> root() const { return root_; }

private:
    FieldTower::Ptr tower_;
    std::complex<double> zeta_;
    std::complex<double> root_{1.0, 0.0};
};

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// Rank by singular-value thresholding (values > tol * max(1, s_max)).
int float_rank(const ComplexMatrix& m, double tol);

/// Solvability of A x = b decided by rank([A | b]) == rank(A) under the same
/// thresholding.
bool float_solvable(const ComplexMatrix& a, const std::vector<std::complex<double>>& b,
                    double tol);

struct FloatCheckItem {
    std::string name;
    std::string exact;
    std::string approx;
    bool agrees = false;
};

struct FloatCheckReport {
    std::vector<FloatCheckItem> items;
    bool all_agree = true;
    double tolerance = 1e-8;
};

/// Recomputes every rank and solvability decision behind a verdict in double
/// precision and compares with the exact path. The exact path always wins;
/// disagreements are reported as warnings.
FloatCheckReport float_cross_check(const Presentation& p, const H1Structure& h,
                                   const CharacterAlpha& a, const DeformabilityReport& rep,
                                   double tol = 1e-8);

} // namespace alexdef
