#include "alexdef/analysis.hpp"
#include "alexdef/errors.hpp"
#include "alexdef/poly_expr.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace alexdef;

namespace {

struct CommonOpts {
    std::string presentation;
    std::string sigma = "trivial";
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_sigma = true) {
    cmd->add_option("-p,--presentation", o.presentation, "presentation file")->required();
    if (with_sigma)
        cmd->add_option("--sigma", o.sigma,
                        "'trivial', 'name=value,...' (values 1, -1, z^k) or 'canonical:e1,e2,...'");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

AnalysisConfig to_config(const CommonOpts& o) {
    AnalysisConfig cfg;
    cfg.presentation_path = o.presentation;
    cfg.sigma_spec = o.sigma;
    cfg.format = o.format == "json" ? AnalysisConfig::Format::Json : AnalysisConfig::Format::Text;
    return cfg;
}

nlohmann::ordered_json json_int(const Int& x) {
    if (x.fits_slong_p()) return nlohmann::ordered_json(x.get_si());
    return nlohmann::ordered_json(x.get_str());
}

nlohmann::ordered_json splitting_json(const PipelineSetup& s) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json phi = nlohmann::ordered_json::array();
    for (const Int& x : s.split.phi) phi.push_back(json_int(x));
    j["phi"] = phi;
    nlohmann::ordered_json proj = nlohmann::ordered_json::array();
    for (int i = 0; i < s.split.ngens(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < s.split.torsion_rank(); ++k) row.push_back(json_int(s.split.proj.at(i, k)));
        proj.push_back(row);
    }
    j["p"] = proj;
    nlohmann::ordered_json sp = nlohmann::ordered_json::array();
    for (const Int& x : s.split.s_p_image) sp.push_back(json_int(x));
    j["s_p_image"] = sp;
    return j;
}

int cmd_h1(const CommonOpts& o) {
    Presentation p = load_presentation(o.presentation);
    H1Structure h = h1_structure(p);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        nlohmann::ordered_json tors = nlohmann::ordered_json::array();
        for (const Int& d : h.torsion) tors.push_back(json_int(d));
        j["torsion"] = tors;
        j["betti"] = h.betti;
        if (h.betti == 1) {
            AnalysisConfig cfg;
            cfg.presentation_path = o.presentation;
            j["splitting"] = splitting_json(prepare_pipeline(cfg));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "H1 = ";
    for (const Int& d : h.torsion) std::cout << "Z/" << d.get_str() << " + ";
    std::cout << (h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti)) << "\n";
    if (h.betti == 1) {
        SplittingData split = canonical_splitting(h);
        std::cout << "phi:";
        for (const Int& x : split.phi) std::cout << " " << x.get_str();
        std::cout << "\np (torsion coordinates per generator):\n";
        for (int i = 0; i < split.ngens(); ++i) {
            std::cout << "  " << p.generator_names[static_cast<std::size_t>(i)] << " ->";
            for (int k = 0; k < split.torsion_rank(); ++k)
                std::cout << " " << split.proj.at(i, k).get_str();
            std::cout << "\n";
        }
        std::cout << "s_p(1) exponents:";
        for (const Int& x : split.s_p_image) std::cout << " " << x.get_str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_alexander(const CommonOpts& o, int up_to) {
    PipelineSetup s = prepare_pipeline(to_config(o));
    LaurentMatrix jac = jacobian(s.pres, s.tw);
    AlexanderSequence alex = alexander_polynomials(jac, up_to);
    bool trivial_sigma = s.tw.sigma_trivial();
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["jacobian"] = nlohmann::ordered_json::array();
        for (int r = 0; r < jac.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < jac.cols(); ++c) row.push_back(jac.at(r, c).to_string());
            j["jacobian"].push_back(row);
        }
        nlohmann::ordered_json deltas = nlohmann::ordered_json::array();
        for (const LaurentPoly& d : alex.deltas) deltas.push_back(d.to_string());
        j["delta"] = deltas;
        j["positive_rank"] = alex.positive_rank;
        if (!alex.positive_rank) {
            SymmetryCheck sym = is_symmetric(alex.delta(0));
            j["symmetric"] = sym.symmetric;
            if (sym.symmetric) j["symmetry_unit"] = sym.unit.to_string();
        }
        if (trivial_sigma) {
            TorsionOrderReport tc = torsion_order_check(s.pres, s.h1, alex);
            if (!tc.skipped)
                j["torsion_check"] = {{"delta_at_one", rat_to_string(tc.delta_at_one)},
                                      {"tors_order", tc.tors_order.get_str()},
                                      {"agrees", tc.agrees}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "Jacobian:\n" << jac.to_string() << "\n";
    for (std::size_t k = 0; k < alex.deltas.size(); ++k)
        std::cout << "Delta_" << k << " = " << alex.deltas[k].to_string() << "\n";
    if (alex.positive_rank) {
        std::cout << "Delta_0 = 0: the Alexander module has positive rank\n";
    } else {
        SymmetryCheck sym = is_symmetric(alex.delta(0));
        std::cout << "Delta_0 symmetric: " << (sym.symmetric ? "yes" : "no");
        if (sym.symmetric) std::cout << " (unit " << sym.unit.to_string() << ")";
        std::cout << "\n";
    }
    if (trivial_sigma) {
        TorsionOrderReport tc = torsion_order_check(s.pres, s.h1, alex);
        if (!tc.skipped)
            std::cout << "Delta(1) = " << rat_to_string(tc.delta_at_one) << ", |tors H1| = "
                      << tc.tors_order.get_str() << " (" << (tc.agrees ? "agree" : "MISMATCH")
                      << ")\n";
    }
    return 0;
}

int cmd_zeros(const CommonOpts& o) {
    PipelineSetup s = prepare_pipeline(to_config(o));
    AlexanderSequence alex = alexander_polynomials(jacobian(s.pres, s.tw));
    std::vector<RationalZero> zeros = scan_rational_zeros(alex.delta(0));
    if (o.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const RationalZero& z : zeros)
            j.push_back({{"z", rat_to_string(z.z)}, {"multiplicity", z.multiplicity}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "Delta_0 = " << alex.delta(0).to_string() << "\n";
    if (zeros.empty()) {
        std::cout << "no rational zeros\n";
        return 0;
    }
    for (const RationalZero& z : zeros)
        std::cout << "z = " << rat_to_string(z.z) << ", multiplicity " << z.multiplicity << "\n";
    return 0;
}

int cmd_cocycle(const CommonOpts& o, const std::string& minpoly_str) {
    PipelineSetup s = prepare_pipeline(to_config(o));
    CharacterAlpha alpha = make_character(s.tw, parse_poly_expr(minpoly_str, s.tw.field));
    CocycleVec d = cocycle_generator(s.pres, alpha);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (const FieldElem& v : d.values) vals.push_back(v.to_string());
        j["d_plus"] = vals;
        j["z_minpoly"] = alpha.z_minpoly.to_string();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "d_plus on generators (module C_alpha, z minpoly " << alpha.z_minpoly.to_string()
              << "):\n";
    for (int i = 0; i < s.pres.ngens(); ++i)
        std::cout << "  " << s.pres.generator_names[static_cast<std::size_t>(i)] << " -> "
                  << d.values[static_cast<std::size_t>(i)].to_string() << "\n";
    return 0;
}

int cmd_analyze(const CommonOpts& o, const std::string& minpoly_str, bool scan, bool fcheck) {
    AnalysisConfig cfg = to_config(o);
    cfg.root_minpoly = minpoly_str;
    cfg.scan_rational = scan;
    cfg.float_check = fcheck;
    std::vector<AnalyzeOutput> outs = run_analyze(cfg);
    std::cout << render_outputs(cfg, outs);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Alexander polynomials and deformations of diagonal characters "
                 "of finitely presented rational-homology-circle groups"};
    app.require_subcommand(1);

    CommonOpts h1_opts;
    CLI::App* h1_cmd = app.add_subcommand("h1", "first homology and canonical splitting");
    add_common(h1_cmd, h1_opts, false);

    CommonOpts alex_opts;
    int up_to = -1;
    CLI::App* alex_cmd =
        app.add_subcommand("alexander", "Jacobian and twisted Alexander polynomials");
    add_common(alex_cmd, alex_opts);
    alex_cmd->add_option("-k,--up-to", up_to, "highest Delta index to compute");

    CommonOpts zeros_opts;
    CLI::App* zeros_cmd =
        app.add_subcommand("zeros", "rational zeros of Delta_0 with multiplicities");
    add_common(zeros_cmd, zeros_opts);

    CommonOpts coc_opts;
    std::string coc_minpoly;
    CLI::App* coc_cmd = app.add_subcommand("cocycle", "generating cocycle d_plus at a zero");
    add_common(coc_cmd, coc_opts);
    coc_cmd->add_option("--root-minpoly", coc_minpoly, "minimal polynomial of z over Q(zeta)")
        ->required();

    CommonOpts an_opts;
    std::string an_minpoly;
    bool scan = false, fcheck = false;
    CLI::App* an_cmd = app.add_subcommand("analyze", "full deformability verdict");
    add_common(an_cmd, an_opts);
    an_cmd->add_option("--root-minpoly", an_minpoly, "minimal polynomial of z over Q(zeta)");
    an_cmd->add_flag("--scan-rational", scan, "analyze every rational zero of Delta_0");
    an_cmd->add_flag("--float-check", fcheck,
                     "re-run rank/solvability decisions in double precision as a cross-check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*h1_cmd) return cmd_h1(h1_opts);
        if (*alex_cmd) return cmd_alexander(alex_opts, up_to);
        if (*zeros_cmd) return cmd_zeros(zeros_opts);
        if (*coc_cmd) return cmd_cocycle(coc_opts, coc_minpoly);
        if (*an_cmd) return cmd_analyze(an_opts, an_minpoly, scan, fcheck);
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
