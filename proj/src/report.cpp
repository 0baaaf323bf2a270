#include "alexdef/report.hpp"

#include <sstream>

namespace alexdef {

namespace {

nlohmann::ordered_json int_vector(const std::vector<Int>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& x : v) {
        if (x.fits_slong_p())
            arr.push_back(x.get_si());
        else
            arr.push_back(x.get_str());
    }
    return arr;
}

} // namespace

nlohmann::ordered_json report_to_json(const ReportInputs& in, const DeformabilityReport& rep,
                                      const std::optional<FloatCheckReport>& fc) {
    nlohmann::ordered_json j;
    j["presentation"] = in.presentation;
    j["h1"] = {{"torsion", int_vector(in.torsion)}, {"betti", in.betti}};
    j["sigma"] = in.sigma;
    j["phi"] = int_vector(in.phi);
    j["z_minpoly"] = in.z_minpoly;
    nlohmann::ordered_json deltas = nlohmann::ordered_json::array();
    for (const LaurentPoly& d : rep.alex.deltas) deltas.push_back(d.to_string());
    j["delta"] = deltas;
    j["symmetric"] = rep.delta_symmetric;
    if (rep.zero_ord)
        j["zero_order"] = *rep.zero_ord;
    else
        j["zero_order"] = nullptr;
    if (rep.dim_h1_plus)
        j["dim_h1_plus"] = *rep.dim_h1_plus;
    else
        j["dim_h1_plus"] = nullptr;
    if (rep.dim_h1_minus)
        j["dim_h1_minus"] = *rep.dim_h1_minus;
    else
        j["dim_h1_minus"] = nullptr;
    if (rep.obstruction_solvable)
        j["obstruction_solvable"] = *rep.obstruction_solvable;
    else
        j["obstruction_solvable"] = nullptr;
    j["verdict"] = verdict_name(rep.verdict);
    j["components"] = {{"dims", rep.component_dims}, {"transverse", rep.transverse}};
    if (!rep.torsion_check.skipped) {
        j["torsion_check"] = {{"delta_at_one", rat_to_string(rep.torsion_check.delta_at_one)},
                              {"tors_order", rep.torsion_check.tors_order.get_str()},
                              {"agrees", rep.torsion_check.agrees}};
    }
    if (fc) {
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const FloatCheckItem& it : fc->items)
            items.push_back({{"name", it.name},
                             {"exact", it.exact},
                             {"float", it.approx},
                             {"agrees", it.agrees}});
        j["float_check"] = {{"tolerance", fc->tolerance},
                            {"all_agree", fc->all_agree},
                            {"items", items}};
    }
    return j;
}

std::string report_to_text(const ReportInputs& in, const DeformabilityReport& rep,
                           const std::optional<FloatCheckReport>& fc) {
    std::ostringstream os;
    os << "presentation: " << in.presentation << "\n";
    os << "H1 = ";
    for (const Int& d : in.torsion) os << "Z/" << d.get_str() << " + ";
    os << (in.betti == 1 ? "Z" : "Z^" + std::to_string(in.betti)) << "\n";
    os << "sigma: " << in.sigma << "\n";
    os << "phi on generators:";
    for (const Int& x : in.phi) os << " " << x.get_str();
    os << "\n";
    os << "z minpoly: " << in.z_minpoly << "\n";
    for (std::size_t k = 0; k < rep.alex.deltas.size(); ++k)
        os << "Delta_" << k << " = " << rep.alex.deltas[k].to_string() << "\n";
    os << "Delta_0 symmetric: " << (rep.delta_symmetric ? "yes" : "no") << "\n";
    if (rep.zero_ord)
        os << "zero order: " << *rep.zero_ord << "\n";
    else
        os << "zero order: infinity (Delta_0 = 0)\n";
    if (rep.dim_h1_plus) os << "dim H1(C+): " << *rep.dim_h1_plus << "\n";
    if (rep.dim_h1_minus) os << "dim H1(C-): " << *rep.dim_h1_minus << "\n";
    if (rep.obstruction_solvable)
        os << "cup obstruction solvable: " << (*rep.obstruction_solvable ? "yes" : "no") << "\n";
    if (!rep.torsion_check.skipped) {
        os << "Delta(1) = " << rat_to_string(rep.torsion_check.delta_at_one)
           << ", |tors H1| = " << rep.torsion_check.tors_order.get_str() << " ("
           << (rep.torsion_check.agrees ? "agree" : "MISMATCH") << ")\n";
    }
    os << "verdict: " << verdict_name(rep.verdict) << "\n";
    if (!rep.component_dims.empty()) {
        os << "components at rho_alpha: dims";
        for (int d : rep.component_dims) os << " " << d;
        os << (rep.transverse ? ", transverse intersection" : "") << "\n";
    }
    if (fc) {
        os << "float cross-check (tol " << fc->tolerance << "): "
           << (fc->all_agree ? "all decisions agree" : "DISAGREEMENT (exact path wins)") << "\n";
        for (const FloatCheckItem& it : fc->items)
            os << "  " << it.name << ": exact " << it.exact << ", float " << it.approx << " ("
               << (it.agrees ? "ok" : "WARNING") << ")\n";
    }
    return os.str();
}

} // namespace alexdef
