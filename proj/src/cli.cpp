#include "svlab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "svlab/config.hpp"
#include "svlab/errors.hpp"
#include "svlab/parse.hpp"
#include "svlab/report.hpp"

namespace svlab {

namespace {

struct Opts {
    std::string config_path;
    std::string out_path;
    std::string csv_dir;
    bool deep = false;
    bool serial = false;
};

void emit_json(const Opts& o, const nlohmann::json& j) {
    if (!o.out_path.empty()) atomic_write(o.out_path, j.dump(2) + "\n");
}

void emit_csv(const Opts& o, const std::string& name, const std::string& content) {
    if (o.csv_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(o.csv_dir, ec);
    if (ec) throw ConfigError("cannot create csv directory " + o.csv_dir + ": " + ec.message());
    atomic_write(o.csv_dir + "/" + name, content);
}

int cmd_validate(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    VarietyModel v = cfg.make_variety();
    nlohmann::json j{{"command", "validate"}, {"n", cfg.n}, {"k", cfg.k}};
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : cfg.generators) gens.push_back(poly_str(g));
    j["generators"] = gens;
    std::cout << "variety: n=" << cfg.n << " k=" << cfg.k << " generators="
              << cfg.generators.size() << "\n";
    if (!cfg.hyp_polys.empty()) {
        HypersurfaceFamily fam = cfg.make_family();
        validate_family_on(v, fam);
        nlohmann::json hyps = nlohmann::json::array();
        for (int i = 0; i < fam.q(); ++i)
            hyps.push_back({{"poly", poly_str(fam.members[static_cast<std::size_t>(i)])},
                            {"degree", fam.degrees[static_cast<std::size_t>(i)]}});
        j["hypersurfaces"] = hyps;
        j["N"] = fam.N;
        j["d"] = fam.common_degree;
        j["hilbert_d"] = v.hilbert(fam.common_degree);
        std::cout << "family: q=" << fam.q() << " N=" << fam.N
                  << " d=" << fam.common_degree
                  << " H_V(d)=" << v.hilbert(fam.common_degree) << "\n";
    }
    auto check_curve = [&](const RationalCurve& c, const char* key) {
        if (static_cast<int>(c.comps.size()) != cfg.n + 1)
            throw PreconditionError(std::string(key) + ": component count != n+1");
        if (!curve_on_variety(v, c))
            throw PreconditionError(std::string(key) +
                                    ": curve does not lie on the variety");
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& p : c.comps) comps.push_back(poly_str(p));
        j[key] = comps;
        j[std::string(key) + "_degree"] = c.degree();
        std::cout << key << ": degree " << c.degree() << ", on variety\n";
    };
    if (cfg.curve_f) check_curve(*cfg.curve_f, "curve_f");
    if (cfg.curve_g) check_curve(*cfg.curve_g, "curve_g");
    j["ok"] = true;
    std::cout << "config OK\n";
    emit_json(o, j);
    return 0;
}

int cmd_hilbert(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    VarietyModel v = cfg.make_variety();
    nlohmann::json values = nlohmann::json::array();
    for (int d = 1; d <= cfg.hilbert_dmax; ++d) {
        int h = v.hilbert(d);
        values.push_back({{"d", d}, {"hilbert", h}});
        std::cout << "H_V(" << d << ") = " << h << "\n";
    }
    auto warnings = v.dimension_warnings();
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    emit_json(o, nlohmann::json{{"command", "hilbert"},
                                {"dmax", cfg.hilbert_dmax},
                                {"values", values},
                                {"warnings", warnings}});
    return 0;
}

int cmd_position(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    VarietyModel v = cfg.make_variety();
    HypersurfaceFamily fam = cfg.make_family();
    PositionReport rep = check_subgeneral(v, fam, !o.serial, cfg.d_cap);
    int empty = 0, nonempty = 0, inconclusive = 0;
    for (const auto& row : rep.rows) {
        if (row.verdict == Emptiness::Empty) ++empty;
        else if (row.verdict == Emptiness::NonEmpty) ++nonempty;
        else ++inconclusive;
    }
    std::cout << "position: " << overall_str(rep.overall) << " (" << rep.rows.size()
              << " subsets of size " << rep.subset_size << ": " << empty << " empty, "
              << nonempty << " nonempty, " << inconclusive << " inconclusive)\n";
    nlohmann::json j = json_of(rep);
    j["command"] = "position";
    emit_json(o, j);
    return 0;
}

int cmd_weights(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    VarietyModel v = cfg.make_variety();
    HypersurfaceFamily fam = cfg.make_family();
    Rng rng(cfg.seed);
    WeightCertificate cert = generalized_weights(v, fam, rng);
    std::cout << "weights: q=" << cert.q << " N=" << cert.n_param << " k=" << cert.k
              << " omega_tilde=" << rat_str(cert.omega_tilde) << "\n";
    for (int i = 0; i < cert.q; ++i)
        std::cout << "  omega_" << i << " = "
                  << rat_str(cert.omega[static_cast<std::size_t>(i)]) << "\n";
    std::cout << "checks: " << (all_pass(cert.transcript) ? "all pass" : "FAILED")
              << " (" << cert.transcript.size() << " records)\n";
    nlohmann::json j{{"command", "weights"}, {"certificate", json_of(cert)}};
    emit_json(o, j);
    return 0;
}

int cmd_smt(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    if (!cfg.curve_f)
        throw ConfigError("smt requires curve_f");
    VarietyModel v = cfg.make_variety();
    HypersurfaceFamily fam = cfg.make_family();
    SMTOptions opt;
    opt.deep = o.deep;
    opt.quad_tol = cfg.quad_tol;
    opt.root_tol = cfg.root_tol;
    opt.r_grid = cfg.r_grid;
    opt.seed = cfg.seed;
    opt.d_cap = cfg.d_cap;
    opt.max_retries = cfg.max_retries;
    opt.parallel = !o.serial;
    opt.alpha_beta_samples = cfg.alpha_beta_samples;
    SMTReport rep = smt_verify(v, fam, *cfg.curve_f, opt);
    std::cout << "q=" << rep.q << " N=" << rep.n_param << " k=" << rep.k
              << " d=" << rep.d << " H_V(d)=" << rep.hilbert << " coefficient="
              << rat_str(rep.coefficient) << " deg f=" << rep.curve_degree << "\n";
    std::cout << "slope: lhs=" << rat_str(rep.slope_lhs) << " rhs="
              << rat_str(rep.slope_rhs) << " margin=" << rat_str(rep.slope_margin)
              << (rep.slope_margin >= 0 ? " (pass)" : " (VIOLATED)") << "\n";
    for (const auto& row : rep.numeric_rows)
        std::cout << "  r=" << fmt_double(row.r) << " margin=" << fmt_double(row.margin)
                  << "\n";
    for (double r : rep.skipped_radii)
        std::cout << "  skipped r=" << fmt_double(r) << "\n";
    if (rep.claim)
        std::cout << "claim ledger: " << rep.claim->rows.size() << " clusters, "
                  << (rep.claim->all_pass ? "all pass" : "VIOLATED") << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "verdict: " << (rep.ok() ? "ok" : "DEFECT") << "\n";
    nlohmann::json j = json_of(rep);
    j["command"] = "smt";
    emit_json(o, j);
    emit_csv(o, "slope.csv", slope_csv(rep));
    emit_csv(o, "numeric.csv", numeric_csv(rep));
    if (rep.claim) emit_csv(o, "claim.csv", claim_csv(*rep.claim));
    return rep.ok() ? 0 : 3;
}

int cmd_unique(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    if (!cfg.curve_f || !cfg.curve_g)
        throw ConfigError("unique requires curve_f and curve_g");
    VarietyModel v = cfg.make_variety();
    HypersurfaceFamily fam = cfg.make_family();
    UniquenessOptions opt;
    opt.quad_tol = cfg.quad_tol;
    opt.root_tol = cfg.root_tol;
    opt.r_grid = cfg.r_grid;
    opt.parallel = !o.serial;
    opt.d_cap = cfg.d_cap;
    UniquenessReport rep = uniqueness_check(v, fam, *cfg.curve_f, *cfg.curve_g, opt);
    std::cout << "q=" << rep.q << " threshold=" << rat_str(rep.threshold) << " met="
              << (rep.threshold_met ? "yes" : "no") << "\n";
    std::cout << "hypotheses: separated=" << (rep.hyp_separated ? "yes" : "no")
              << " agree=" << (rep.hyp_agree ? "yes" : "no") << "\n";
    if (!rep.hyp_separated) std::cout << "  " << rep.separated_detail << "\n";
    if (!rep.hyp_agree) std::cout << "  " << rep.agree_detail << "\n";
    std::cout << "maps_equal=" << (rep.maps_equal ? "yes" : "no")
              << " consistent=" << (rep.consistent ? "yes" : "NO") << "\n";
    nlohmann::json j = json_of(rep);
    j["command"] = "unique";
    int code = rep.consistent ? 0 : 3;
    if (rep.hyp_separated && rep.hyp_agree) {
        Ineq52Report ineq = inequality_52_check(v, fam, *cfg.curve_f, *cfg.curve_g, opt);
        j["inequality_52"] = json_of(ineq);
        emit_csv(o, "ineq52.csv", ineq52_csv(ineq));
        if (ineq.identical_maps) {
            std::cout << "counting inequality: vacuous (identical maps)\n";
        } else {
            std::cout << "counting inequality: margins " << ineq.margin_counting << ", "
                      << ineq.margin_growth << (ineq.pass ? " (pass)" : " (VIOLATED)")
                      << "\n";
        }
        if (!ineq.pass) code = 3;
    }
    emit_json(o, j);
    return code;
}

int cmd_jensen(const Opts& o) {
    RunConfig cfg = load_config(o.config_path);
    if (!cfg.jensen)
        throw ConfigError("jensen requires a \"jensen\" section");
    auto rows = jensen_residual(cfg.jensen->first, cfg.jensen->second, cfg.r_grid,
                                cfg.quad_tol, !o.serial);
    double lo = rows.front().residual, hi = rows.front().residual;
    for (const auto& row : rows) {
        lo = std::min(lo, row.residual);
        hi = std::max(hi, row.residual);
        std::cout << "r=" << fmt_double(row.r) << " T=" << fmt_double(row.characteristic)
                  << " N=" << fmt_double(row.counting) << " m="
                  << fmt_double(row.proximity) << " residual="
                  << fmt_double(row.residual) << "\n";
    }
    std::cout << "residual spread = " << fmt_double(hi - lo) << "\n";
    nlohmann::json j{{"command", "jensen"},
                     {"num", poly_str(cfg.jensen->first)},
                     {"den", poly_str(cfg.jensen->second)},
                     {"rows", json_of(rows)},
                     {"spread", fmt_double(hi - lo)}};
    emit_json(o, j);
    emit_csv(o, "jensen.csv", jensen_csv(rows));
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact value-distribution toolkit for rational curves on "
                 "projective varieties"};
    app.require_subcommand(1);
    Opts o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config_path, "JSON run configuration")
            ->required();
        sub->add_option("--out", o.out_path, "write the JSON report here");
        sub->add_option("--csv-dir", o.csv_dir, "write CSV ledgers into this directory");
        sub->add_flag("--serial", o.serial, "disable parallel kernels");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and sanity-check a config");
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
    CLI::App* position = app.add_subcommand("position", "subgeneral position scan");
    CLI::App* weights = app.add_subcommand("weights", "weight certificate");
    CLI::App* smt = app.add_subcommand("smt", "verify the main inequality");
    CLI::App* unique = app.add_subcommand("unique", "uniqueness test for two curves");
    CLI::App* jensen = app.add_subcommand("jensen", "Jensen residual table");
    for (CLI::App* sub : {validate, hilbert, position, weights, smt, unique, jensen})
        add_common(sub);
    smt->add_flag("--deep", o.deep, "weight certificate, completion, and claim ledger");

    std::vector<std::string> full;
    full.push_back("svlab");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (hilbert->parsed()) return cmd_hilbert(o);
        if (position->parsed()) return cmd_position(o);
        if (weights->parsed()) return cmd_weights(o);
        if (smt->parsed()) return cmd_smt(o);
        if (unique->parsed()) return cmd_unique(o);
        if (jensen->parsed()) return cmd_jensen(o);
        std::cerr << "error: no command\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature failed: " << e.what() << "\n";
        return 2;
    } catch (const LemmaViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace svlab
