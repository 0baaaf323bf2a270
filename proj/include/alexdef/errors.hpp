#pragma once

#include <stdexcept>
#include <string>

namespace alexdef {

/// Input violates a documented precondition (bad presentation, betti != 1,
/// sigma prescription not a homomorphism, ...). Maps to CLI exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Presentation text could not be parsed. Carries 1-based line/column.
class parse_error : public precondition_error {
public:
    parse_error(int line, int column, const std::string& what)
        : precondition_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line(line), column(column) {}

    int line;
    int column;
};

/// A nonzero element of K[s]/(minpoly) turned out non-invertible. The
/// user-supplied minimal polynomial is reducible; irreducibility is not
/// verified up front, every inversion detects this instead.
class zero_divisor_error : public precondition_error {
public:
    explicit zero_divisor_error(const std::string& factor)
        : precondition_error("reducible minimal polynomial: nontrivial factor " + factor),
          factor(factor) {}

    std::string factor;
};

/// A structural law of the analysis failed to hold during a verdict run. On
/// rational-homology-circle inputs this is impossible, so it signals either an
/// implementation bug or violated manifold hypotheses. Maps to CLI exit code 3.
class internal_inconsistency : public std::logic_error {
public:
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace alexdef
