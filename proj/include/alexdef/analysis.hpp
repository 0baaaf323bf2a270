#pragma once

#include "alexdef/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alexdef {

/// Configuration of one run. Exactly one of root_minpoly / scan_rational is
/// active; float_check runs the numeric cross-check in addition to (never
/// instead of) the exact path.
struct AnalysisConfig {
    std::string presentation_path;
    std::string sigma_spec = "trivial";
    std::string root_minpoly;
    bool scan_rational = false;
    bool float_check = false;
    enum class Format { Text, Json } format = Format::Text;
};

/// Shared pipeline state: parsed presentation, homology, splitting, twist.
struct PipelineSetup {
    Presentation pres;
    H1Structure h1;
    SplittingData split;
    TwistSetup tw;
};

/// Parses the file, derives the canonical splitting (betti must be 1) and
/// resolves the sigma prescription ("trivial", "name=value,..." on
/// presentation generators, or "canonical:e1,e2,..." on the SNF torsion
/// generators; values are 1, -1 or z^k).
PipelineSetup prepare_pipeline(const AnalysisConfig& cfg);

/// One analyzed character worth of output.
struct AnalyzeOutput {
    ReportInputs inputs;
    DeformabilityReport report;
    std::optional<FloatCheckReport> float_report;
};

/// Full verdict for the configured root; with scan_rational, one output per
/// rational zero of Delta_0.
std::vector<AnalyzeOutput> run_analyze(const AnalysisConfig& cfg);

struct RationalZero {
    Rat z;
    long multiplicity = 0;
};

/// Rational roots of the unit-normalized Delta_0 with multiplicities
/// (rational-root theorem on the coordinate gcd; trial-division factoring).
std::vector<RationalZero> scan_rational_zeros(const LaurentPoly& delta0);

std::string render_outputs(const AnalysisConfig& cfg, const std::vector<AnalyzeOutput>& outs);

} // namespace alexdef
