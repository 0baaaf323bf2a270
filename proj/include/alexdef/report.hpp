#pragma once

#include "alexdef/deformation.hpp"
#include "alexdef/float_check.hpp"

#include <optional>
#include <string>

#include <json.hpp>

namespace alexdef {

/// Input echo attached to an emitted report.
struct ReportInputs {
    std::string presentation;
    std::string sigma;
    std::string z_minpoly;
    std::vector<Int> torsion;
    int betti = 0;
    std::vector<Int> phi;
};

nlohmann::ordered_json report_to_json(const ReportInputs& in, const DeformabilityReport& rep,
                                      const std::optional<FloatCheckReport>& fc);

std::string report_to_text(const ReportInputs& in, const DeformabilityReport& rep,
                           const std::optional<FloatCheckReport>& fc);

} // namespace alexdef
