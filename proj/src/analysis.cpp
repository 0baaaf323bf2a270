#include "alexdef/analysis.hpp"

#include "alexdef/errors.hpp"
#include "alexdef/poly_expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace alexdef {

namespace {

// "1" -> zeta^0, "-1" -> zeta^(m/2), "z" / "z^k" -> zeta^k
Int parse_root_of_unity_exp(const std::string& val, const Int& m) {
    if (val == "1") return Int(0);
    if (val == "-1") {
        if (sgn(mod_floor(m, Int(2))) != 0)
            throw precondition_error("-1 is not an m-th root of unity for m = " + m.get_str());
        return Int(m / 2);
    }
    if (val == "z") return Int(1);
    if (val.rfind("z^", 0) == 0) {
        try {
            return Int(val.substr(2));
        } catch (const std::exception&) {
            throw precondition_error("malformed root-of-unity value '" + val + "'");
        }
    }
    throw precondition_error("sigma values must be 1, -1, z or z^k; got '" + val + "'");
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Int> resolve_sigma(const std::string& spec, const Presentation& p,
                               const H1Structure& h, const SplittingData& split) {
    if (spec.empty() || spec == "trivial")
        return std::vector<Int>(split.torsion.size(), Int(0));
    if (spec.rfind("canonical:", 0) == 0) {
        std::vector<Int> exps;
        for (const std::string& tok : split_on(spec.substr(10), ',')) {
            if (tok.empty()) throw precondition_error("empty entry in canonical sigma list");
            try {
                exps.push_back(Int(tok));
            } catch (const std::exception&) {
                throw precondition_error("malformed canonical sigma exponent '" + tok + "'");
            }
        }
        return exps;
    }
    Int m = h.torsion_exponent();
    std::vector<std::pair<int, Int>> prescribed;
    for (const std::string& pair : split_on(spec, ',')) {
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw precondition_error("sigma entries must look like name=value; got '" + pair +
                                     "'");
        std::string name = pair.substr(0, eq);
        std::string val = pair.substr(eq + 1);
        int gen = -1;
        for (int i = 0; i < p.ngens(); ++i)
            if (p.generator_names[static_cast<std::size_t>(i)] == name) gen = i;
        if (gen < 0) throw precondition_error("sigma names an undeclared generator '" + name + "'");
        prescribed.emplace_back(gen, parse_root_of_unity_exp(val, m));
    }
    return sigma_from_generator_values(h, split, prescribed);
}

} // namespace

PipelineSetup prepare_pipeline(const AnalysisConfig& cfg) {
    PipelineSetup s;
    s.pres = load_presentation(cfg.presentation_path);
    s.h1 = h1_structure(s.pres);
    s.split = canonical_splitting(s.h1);
    std::vector<Int> exps = resolve_sigma(cfg.sigma_spec, s.pres, s.h1, s.split);
    s.tw = make_twist(s.h1, s.split, std::move(exps));
    return s;
}

namespace {

std::vector<Int> factor_with_trial_division(Int n) {
    std::vector<Int> primes;
    n = abs(n);
    for (Int d(2); d * d <= n && d <= 1000000; d += (d == 2 ? 1 : 2)) {
        while (sgn(mod_floor(n, d)) == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw precondition_error(
                "rational-root scan: coefficient " + n.get_str() +
                " is too large to factor; pass the root explicitly via a minimal polynomial");
        primes.push_back(n);
    }
    return primes;
}

std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> primes = factor_with_trial_division(n);
    std::set<Int> divs{Int(1)};
    for (const Int& p : primes) {
        std::set<Int> next = divs;
        for (const Int& d : divs) next.insert(d * p);
        divs = std::move(next);
    }
    return {divs.begin(), divs.end()};
}

} // namespace

std::vector<RationalZero> scan_rational_zeros(const LaurentPoly& delta0) {
    if (delta0.is_zero())
        throw precondition_error("Delta_0 is identically zero; nothing to scan");
    LaurentPoly delta = delta0.normalize_unit().first;
    const FieldTower::Ptr& tower = delta.tower();
    FieldTower::Ptr rat_tower = FieldTower::rationals();
    // rational roots of delta are common roots of its coordinate polynomials
    int cdeg = tower->cyc_degree();
    LaurentPoly g(rat_tower);
    bool have_g = false;
    for (int r = 0; r < cdeg; ++r) {
        LaurentPoly gr(rat_tower);
        for (const auto& [e, c] : delta.terms()) {
            const Rat& q = c.coords()[0][static_cast<std::size_t>(r)];
            if (sgn(q) != 0) gr.add_term(e, FieldElem::from_rat(rat_tower, q));
        }
        if (gr.is_zero()) continue;
        g = have_g ? laurent_gcd(g, gr) : gr.normalize_unit().first;
        have_g = true;
    }
    if (!have_g || g.max_exp() == 0) return {};
    LaurentPoly gi = integer_normal_form(g);
    Rat c0, lead;
    gi.coeff(0).is_rational(&c0);
    gi.terms().rbegin()->second.is_rational(&lead);
    std::vector<Int> ps = divisors_of(c0.get_num());
    std::vector<Int> qs = divisors_of(lead.get_num());
    std::set<Rat> candidates;
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat c = make_rat(p, q);
            candidates.insert(c);
            candidates.insert(-c);
        }
    std::vector<RationalZero> zeros;
    for (const Rat& c : candidates) {
        FieldElem zc = FieldElem::from_rat(tower, c);
        if (!delta.evaluate(zc).is_zero()) continue;
        LaurentPoly minpoly = LaurentPoly::variable(tower) - LaurentPoly::from_rat(tower, c);
        std::optional<long> mult = root_multiplicity(delta, minpoly);
        zeros.push_back({c, mult.value_or(0)});
    }
    std::sort(zeros.begin(), zeros.end(),
              [](const RationalZero& a, const RationalZero& b) { return a.z < b.z; });
    return zeros;
}

namespace {

AnalyzeOutput analyze_one(const AnalysisConfig& cfg, const PipelineSetup& s,
                          const LaurentPoly& minpoly) {
    AnalyzeOutput out;
    CharacterAlpha alpha = make_character(s.tw, minpoly);
    out.report = deformability_verdict(s.pres, s.h1, alpha);
    if (cfg.float_check)
        out.float_report = float_cross_check(s.pres, s.h1, alpha, out.report);
    out.inputs.presentation = cfg.presentation_path;
    out.inputs.sigma = cfg.sigma_spec.empty() ? "trivial" : cfg.sigma_spec;
    out.inputs.z_minpoly = minpoly.to_string();
    out.inputs.torsion = s.h1.torsion;
    out.inputs.betti = s.h1.betti;
    out.inputs.phi = s.split.phi;
    return out;
}

} // namespace

std::vector<AnalyzeOutput> run_analyze(const AnalysisConfig& cfg) {
    if (cfg.scan_rational == !cfg.root_minpoly.empty())
        throw precondition_error("exactly one root spec: --root-minpoly or --scan-rational");
    PipelineSetup s = prepare_pipeline(cfg);
    std::vector<AnalyzeOutput> outs;
    if (cfg.scan_rational) {
        AlexanderSequence alex = alexander_polynomials(jacobian(s.pres, s.tw));
        for (const RationalZero& rz : scan_rational_zeros(alex.delta(0))) {
            LaurentPoly minpoly = LaurentPoly::variable(s.tw.field) -
                                  LaurentPoly::from_rat(s.tw.field, rz.z);
            outs.push_back(analyze_one(cfg, s, minpoly));
        }
    } else {
        outs.push_back(analyze_one(cfg, s, parse_poly_expr(cfg.root_minpoly, s.tw.field)));
    }
    return outs;
}

std::string render_outputs(const AnalysisConfig& cfg, const std::vector<AnalyzeOutput>& outs) {
    if (cfg.format == AnalysisConfig::Format::Json) {
        if (!cfg.scan_rational) {
            return report_to_json(outs.at(0).inputs, outs.at(0).report, outs.at(0).float_report)
                       .dump(2) +
                   "\n";
        }
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const AnalyzeOutput& o : outs)
            arr.push_back(report_to_json(o.inputs, o.report, o.float_report));
        return arr.dump(2) + "\n";
    }
    if (outs.empty()) return "no rational zeros of Delta_0 found\n";
    std::ostringstream os;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        if (i > 0) os << "----\n";
        os << report_to_text(outs[i].inputs, outs[i].report, outs[i].float_report);
    }
    return os.str();
}

} // namespace alexdef
