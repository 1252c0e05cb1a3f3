#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "heightbound/bounds.hpp"
#include "heightbound/format.hpp"
#include "heightbound/heights.hpp"
#include "heightbound/int_poly.hpp"
#include "heightbound/root_finder.hpp"
#include "heightbound/scan.hpp"

using namespace heightbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // verification failure or scan violation
constexpr int kExitUsage = 2;  // parse or usage error

// accepts "r/d" text or a decimal; fractions keep the ratio exact
double parse_ratio(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash != std::string::npos) {
        const long num = std::stol(text.substr(0, slash));
        const long den = std::stol(text.substr(slash + 1));
        if (den <= 0)
            throw std::domain_error("ratio denominator must be positive");
        return static_cast<double>(num) / static_cast<double>(den);
    }
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size())
        throw std::domain_error("malformed ratio '" + text + "'");
    return v;
}

int cmd_height(const std::string& poly_text, bool json) {
    IntPoly p = parse_poly(poly_text).normalized();
    if (p.degree() < 1)
        throw poly_parse_error("degree must be >= 1");
    if (!p.is_squarefree())
        throw poly_parse_error("polynomial has repeated roots; pass a squarefree polynomial");
    const bool irreducible = is_irreducible(p);
    const HeightProfile hp = height_profile(p);
    if (json) {
        std::string body = to_json(hp);
        body.pop_back(); // strip '}'
        std::cout << body << ",\"irreducible\":" << (irreducible ? "true" : "false") << "}\n";
        return kExitOk;
    }
    std::cout << "poly:   " << hp.poly.to_string() << "\n";
    if (!irreducible)
        std::cerr << "warning: polynomial is reducible; the height refers to the root product,"
                     " not to a single algebraic number\n";
    std::cout << "d:      " << hp.d << "\n";
    std::cout << "r:      " << hp.r << "\n";
    std::cout << "R:      " << ratio_string(hp.r, hp.d) << "\n";
    std::cout << "mahler: " << fmt17(hp.mahler) << "\n";
    std::cout << "height: " << fmt17(hp.height) << "\n";
    if (hp.bound) {
        std::cout << "bound:  " << fmt17(*hp.bound) << "\n";
        std::cout << "margin: " << fmt17(*hp.margin) << "\n";
        if (p.constant() == 0 || p.eval(1) == 0 || p.eval(-1) == 0)
            std::cout << "note:   alpha in {0, 1, -1}: theorem hypothesis fails\n";
    } else {
        std::cout << "note:   r = 0: theorem hypothesis fails, no bound applies\n";
    }
    return kExitOk;
}

int cmd_bound(const std::string& ratio_text, bool json) {
    const double ratio = parse_ratio(ratio_text);
    const double bound = garza_bound(ratio); // validates the range
    const double a = optimal_a(ratio);
    const LemmaParams lp = lemma_params(a);
    const double chain_gap = bound_identity_chain(ratio);
    const bool schinzel_case = ratio == 1.0;
    if (json) {
        std::cout << "{\"R\":" << fmt17(ratio) << ",\"bound\":" << fmt17(bound)
                  << ",\"a\":" << fmt17(a) << ",\"m_real\":" << fmt17(lp.m_real)
                  << ",\"m_complex\":" << fmt17(lp.m_complex)
                  << ",\"chain_discrepancy\":" << fmt17(chain_gap)
                  << ",\"schinzel_case\":" << (schinzel_case ? "true" : "false") << "}\n";
        return kExitOk;
    }
    std::cout << "R:                 " << ratio_text << "\n";
    std::cout << "bound B(R):        " << fmt17(bound);
    if (schinzel_case)
        std::cout << "   (Schinzel case, ((1+sqrt 5)/2)^(1/2))";
    std::cout << "\n";
    std::cout << "a(R):              " << fmt17(a) << "\n";
    std::cout << "M_R:               " << fmt17(lp.m_real) << "\n";
    std::cout << "M_C:               " << fmt17(lp.m_complex) << "\n";
    std::cout << "chain discrepancy: " << fmt17(chain_gap) << "\n";
    return kExitOk;
}

int cmd_lemma(double a, bool json) {
    const LemmaParams lp = lemma_params(a);
    const MaximaEstimate est = numeric_maxima(a);
    const double d_real = std::fabs(lp.m_real - est.m_real);
    const double d_cplx = std::fabs(lp.m_complex - est.m_complex);
    const double d_x1 = std::fabs(lp.x1 - est.x_real);
    if (json) {
        std::cout << "{\"a\":" << fmt17(a) << ",\"m_real\":" << fmt17(lp.m_real)
                  << ",\"m_complex\":" << fmt17(lp.m_complex) << ",\"x1\":" << fmt17(lp.x1)
                  << ",\"x2\":" << fmt17(lp.x2) << ",\"m_real_numeric\":" << fmt17(est.m_real)
                  << ",\"m_complex_numeric\":" << fmt17(est.m_complex)
                  << ",\"delta_m_real\":" << fmt17(d_real)
                  << ",\"delta_m_complex\":" << fmt17(d_cplx)
                  << ",\"delta_x1\":" << fmt17(d_x1) << "}\n";
        return kExitOk;
    }
    std::cout << "a:           " << fmt17(a) << "\n";
    std::cout << "M_R:         " << fmt17(lp.m_real) << "   (numeric " << fmt17(est.m_real)
              << ", delta " << fmt17(d_real) << ")\n";
    std::cout << "M_C:         " << fmt17(lp.m_complex) << "   (numeric " << fmt17(est.m_complex)
              << ", delta " << fmt17(d_cplx) << ")\n";
    std::cout << "x1:          " << fmt17(lp.x1) << "   (numeric " << fmt17(est.x_real)
              << ", delta " << fmt17(d_x1) << ")\n";
    std::cout << "x2:          " << fmt17(lp.x2) << "\n";
    return kExitOk;
}

int cmd_optimize(const std::string& ratio_text, bool json) {
    const double ratio = parse_ratio(ratio_text);
    const ExponentSearch search = optimize_exponents(ratio);
    const double a = optimal_a(ratio);
    const double bound = garza_bound(ratio);
    if (json) {
        std::cout << "{\"R\":" << fmt17(ratio) << ",\"u\":" << fmt17(search.best.u)
                  << ",\"v\":" << fmt17(search.best.v) << ",\"value\":" << fmt17(search.value)
                  << ",\"grid_u\":" << fmt17(search.grid_best.u)
                  << ",\"grid_v\":" << fmt17(search.grid_best.v)
                  << ",\"grid_value\":" << fmt17(search.grid_value)
                  << ",\"boundary_value\":" << fmt17(search.boundary_value)
                  << ",\"reference_u\":" << fmt17(0.5 - a) << ",\"reference_v\":" << fmt17(a)
                  << ",\"reference_value\":" << fmt17(bound) << "}\n";
        return kExitOk;
    }
    std::cout << "R:               " << ratio_text << "\n";
    std::cout << "coarse grid:     (" << fmt17(search.grid_best.u) << ", "
              << fmt17(search.grid_best.v) << ")  value " << fmt17(search.grid_value) << "\n";
    std::cout << "refined:         (" << fmt17(search.best.u) << ", " << fmt17(search.best.v)
              << ")  value " << fmt17(search.value) << "\n";
    std::cout << "reference:       (" << fmt17(0.5 - a) << ", " << fmt17(a) << ")  value "
              << fmt17(bound) << "\n";
    std::cout << "boundary u+2v=1: " << fmt17(search.boundary_value) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& poly_text, bool json) {
    IntPoly p = parse_poly(poly_text).normalized();
    std::ostringstream fail_reason;
    if (p.degree() < 1)
        fail_reason << "degree 0: no algebraic number";
    else if (!p.is_squarefree())
        fail_reason << "not squarefree";
    else if (p.constant() == 0 || p.eval(1) == 0 || p.eval(-1) == 0)
        fail_reason << "alpha in {0, 1, -1}: theorem hypothesis fails";
    else if (!is_irreducible(p))
        fail_reason << "reducible: not a minimal polynomial";
    else if (p.sturm_real_count() == 0)
        fail_reason << "r = 0: theorem hypothesis fails";
    if (!fail_reason.str().empty()) {
        if (json)
            std::cout << "{\"poly\":\"" << json_escape(p.to_string()) << "\",\"eligible\":false,"
                      << "\"reason\":\"" << json_escape(fail_reason.str()) << "\"}\n";
        else
            std::cout << "ineligible: " << fail_reason.str() << "\n";
        return kExitFail;
    }

    ScanConfig config;
    const ScanRecord rec = verify_polynomial(p, config);
    const ProductPair arch = archimedean_norm_product(p);
    const bool equality = std::fabs(*rec.profile.margin) <= config.tolerance;
    const bool pass = !rec.violation && !rec.identity_failure;
    if (json) {
        std::cout << "{\"poly\":\"" << json_escape(p.to_string()) << "\",\"eligible\":true"
                  << ",\"height\":" << fmt17(rec.profile.height)
                  << ",\"bound\":" << fmt17(*rec.profile.bound)
                  << ",\"margin\":" << fmt17(*rec.profile.margin);
        if (rec.slacks.integer_case_gap)
            std::cout << ",\"integer_case_gap\":" << fmt17(*rec.slacks.integer_case_gap);
        std::cout << ",\"archimedean_numeric\":" << fmt17(arch.numeric_side)
                  << ",\"archimedean_exact\":" << fmt17(arch.exact_side)
                  << ",\"archimedean_gap\":" << fmt17(rec.slacks.archimedean_gap)
                  << ",\"reversal_gap\":" << fmt17(rec.slacks.reversal_gap)
                  << ",\"final_slack\":" << fmt17(*rec.slacks.final_slack)
                  << ",\"equality\":" << (equality ? "true" : "false")
                  << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
        return pass ? kExitOk : kExitFail;
    }
    std::cout << "poly:             " << rec.profile.poly.to_string() << "\n";
    std::cout << "height:           " << fmt17(rec.profile.height) << "\n";
    std::cout << "bound B(" << ratio_string(rec.profile.r, rec.profile.d)
              << "):       " << fmt17(*rec.profile.bound) << "\n";
    std::cout << "margin:           " << fmt17(*rec.profile.margin)
              << (equality ? "   (equality case)" : "") << "\n";
    if (rec.slacks.integer_case_gap)
        std::cout << "integer-case gap: " << fmt17(*rec.slacks.integer_case_gap) << "\n";
    std::cout << "archimedean:      numeric " << fmt17(arch.numeric_side) << ", exact "
              << fmt17(arch.exact_side) << ", gap " << fmt17(rec.slacks.archimedean_gap) << "\n";
    std::cout << "reversal gap:     " << fmt17(rec.slacks.reversal_gap) << "\n";
    std::cout << "final slack:      " << fmt17(*rec.slacks.final_slack) << "\n";
    std::cout << (pass ? "all identities pass\n" : "IDENTITY FAILURE\n");
    return pass ? kExitOk : kExitFail;
}

int cmd_scan(const ScanConfig& config, const std::string& out_path, const std::string& fmt,
             bool json) {
    const ScanResult res = run_scan(config);
    std::ostringstream table;
    if (fmt == "json")
        export_table_json(res.table, table);
    else
        export_table_csv(res.table, table);

    if (json) {
        std::cout << "{\"max_degree\":" << config.max_degree
                  << ",\"coeff_bound\":" << config.coeff_bound
                  << ",\"candidates\":" << res.candidates << ",\"eligible\":" << res.eligible
                  << ",\"violations\":" << res.violations
                  << ",\"identity_failures\":" << res.identity_failures
                  << ",\"exceptions\":" << res.exceptions.size() << ",\"table\":";
        std::ostringstream jt;
        export_table_json(res.table, jt);
        std::cout << jt.str() << "}\n";
    } else {
        std::cout << "candidates:        " << res.candidates << "\n";
        std::cout << "eligible:          " << res.eligible << "\n";
        std::cout << "violations:        " << res.violations << "\n";
        std::cout << "identity failures: " << res.identity_failures << "\n";
        std::cout << "exceptions:        " << res.exceptions.size() << "\n";
        for (const auto& v : res.violation_polys)
            std::cerr << "VIOLATION: " << v << "\n";
        for (const auto& e : res.exceptions)
            std::cerr << "exception: " << e << "\n";
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file " + out_path);
        f << table.str();
    } else if (!json) {
        std::cout << table.str();
    }
    return res.ok() ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"absolute heights of algebraic numbers and the lower bound B(R)"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string poly_text, ratio_text, out_path;
    double a_param = 0.25;
    std::string fmt = "csv";
    ScanConfig config;

    auto* heightc = app.add_subcommand("height", "height profile of one polynomial");
    heightc->add_option("poly", poly_text, "polynomial, e.g. \"x^2-x-1\" or \"-1,-1,1\"")
        ->required();

    auto* boundc = app.add_subcommand("bound", "evaluate the lower bound B(R)");
    boundc->add_option("--ratio", ratio_text, "real-conjugate fraction, 0 < R <= 1 (r/d or decimal)")
        ->required();

    auto* lemmac = app.add_subcommand("lemma", "closed-form maxima with numeric-oracle deltas");
    lemmac->add_option("--a", a_param, "parameter a, 0 < a < 1/2")->required();

    auto* optc = app.add_subcommand("optimize", "search exponent pairs |x|^u |1-x^2|^v");
    optc->add_option("--ratio", ratio_text, "real-conjugate fraction, 0 < R <= 1")->required();

    auto* verifyc = app.add_subcommand("verify", "check the proof identities for one polynomial");
    verifyc->add_option("poly", poly_text, "polynomial text")->required();

    auto* scanc = app.add_subcommand("scan", "exhaustive verification over a coefficient box");
    scanc->add_option("--max-degree", config.max_degree, "degree cap (<= 8)")->required();
    scanc->add_option("--coeff-bound", config.coeff_bound, "coefficient box half-width")->required();
    scanc->add_flag("--monic", config.monic_only, "monic polynomials only");
    scanc->add_option("--jobs", config.workers, "parallel workers");
    scanc->add_option("--out", out_path, "write the extremal table to this file");
    scanc->add_option("--format", fmt, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (heightc->parsed())
            return cmd_height(poly_text, json);
        if (boundc->parsed())
            return cmd_bound(ratio_text, json);
        if (lemmac->parsed())
            return cmd_lemma(a_param, json);
        if (optc->parsed())
            return cmd_optimize(ratio_text, json);
        if (verifyc->parsed())
            return cmd_verify(poly_text, json);
        if (scanc->parsed())
            return cmd_scan(config, out_path, fmt, json);
    } catch (const poly_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
