#ifndef ATOMPHOTON_CLI_HPP
#define ATOMPHOTON_CLI_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atomphoton/coordinate.hpp"
#include "atomphoton/entanglement.hpp"
#include "atomphoton/io.hpp"
#include "atomphoton/momentum.hpp"
#include "atomphoton/verify.hpp"
#include "atomphoton/widths.hpp"

// Command runners behind the CLI front end.  Fully deterministic: a given
// RunConfig maps to one byte sequence on disk, and the effective config is
// echoed into every output header.

namespace atomphoton::cli {

struct RunConfig {
    double eta0 = 0.05;
    double beta = 0.1;
    double tau_spr = 100.0;
    double t = 5.0;
    int grid = 512;
    double extent_sigmas = 8.0;
    std::string model = "full_1d";  // full_1d | gaussian_1d | momentum_lorentz | momentum_gauss
    double gauss_width = 1.0;       // Gaussian-model photon width A
    bool two_sided = false;
    std::string out;
    // sweep controls
    double log10_eta_min = -20.0;
    double log10_eta_max = 6.0;
    int points = 261;
    double t_max = -1.0;  // <= 0: no time parameterization (rsweep), 10*tau_spr (uncertainty)

    Params params() const { return make_params(eta0, beta, tau_spr); }

    std::string echo() const {
        nlohmann::ordered_json j = {{"eta0", eta0},
                                    {"beta", beta},
                                    {"tau_spr", tau_spr},
                                    {"t", t},
                                    {"grid", grid},
                                    {"extent_sigmas", extent_sigmas},
                                    {"model", model},
                                    {"gauss_width", gauss_width},
                                    {"two_sided", two_sided},
                                    {"log10_eta_min", log10_eta_min},
                                    {"log10_eta_max", log10_eta_max},
                                    {"points", points},
                                    {"t_max", t_max}};
        return j.dump();
    }
};

// Flat-key JSON config file; CLI flags override loaded values.
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
    const nlohmann::json j = nlohmann::json::parse(read_file(path));
    if (j.contains("eta0")) cfg.eta0 = j["eta0"].get<double>();
    if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
    if (j.contains("tau_spr")) cfg.tau_spr = j["tau_spr"].get<double>();
    if (j.contains("t")) cfg.t = j["t"].get<double>();
    if (j.contains("grid")) cfg.grid = j["grid"].get<int>();
    if (j.contains("extent_sigmas")) cfg.extent_sigmas = j["extent_sigmas"].get<double>();
    if (j.contains("model")) cfg.model = j["model"].get<std::string>();
    if (j.contains("gauss_width")) cfg.gauss_width = j["gauss_width"].get<double>();
    if (j.contains("two_sided")) cfg.two_sided = j["two_sided"].get<bool>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("log10_eta_min")) cfg.log10_eta_min = j["log10_eta_min"].get<double>();
    if (j.contains("log10_eta_max")) cfg.log10_eta_max = j["log10_eta_max"].get<double>();
    if (j.contains("points")) cfg.points = j["points"].get<int>();
    if (j.contains("t_max")) cfg.t_max = j["t_max"].get<double>();
}

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_out(const RunConfig& cfg) {
    if (cfg.out.empty()) throw usage_error("--out PATH is required for this command");
}

// widths: relative coincidence / single-particle curves over a log-spaced
// eta range at fixed beta.
inline int run_widths(const RunConfig& cfg) {
    require_out(cfg);
    if (cfg.points < 2 || !(cfg.log10_eta_max > cfg.log10_eta_min))
        throw usage_error("widths: need points >= 2 and log10_eta_max > log10_eta_min");
    std::ostringstream os;
    os << "# command=widths, beta=" << fmt17(cfg.beta) << "\n";
    os << "# config: " << cfg.echo() << "\n";
    os << "log10_eta,rel_coinc_ph,rel_single_ph,rel_coinc_at,rel_single_at\n";
    for (int i = 0; i < cfg.points; ++i) {
        const double lg = cfg.log10_eta_min +
                          (cfg.log10_eta_max - cfg.log10_eta_min) * i / (cfg.points - 1);
        const Params p = make_params(std::pow(10.0, lg), cfg.beta, cfg.tau_spr);
        const WidthReport r = analytic_coord_widths(p, TimePoint(0.0));
        os << fmt17(lg) << "," << fmt17(r.rel_coinc_ph) << "," << fmt17(r.rel_single_ph) << ","
           << fmt17(r.rel_coinc_at) << "," << fmt17(r.rel_single_at) << "\n";
    }
    write_file(cfg.out, os.str());
    return 0;
}

// rsweep: R vs eta (columns eta,R), or t,eta,R when a time range is given.
inline int run_rsweep(const RunConfig& cfg) {
    require_out(cfg);
    if (cfg.points < 2) throw usage_error("rsweep: need points >= 2");
    std::ostringstream os;
    os << "# command=rsweep, beta=" << fmt17(cfg.beta) << "\n";
    os << "# config: " << cfg.echo() << "\n";
    if (cfg.t_max > 0.0) {
        const Params p = cfg.params();
        os << "t,eta,R\n";
        for (int i = 0; i < cfg.points; ++i) {
            const double t = cfg.t_max * i / (cfg.points - 1);
            os << fmt17(t) << "," << fmt17(eta_at(p, TimePoint(t))) << ","
               << fmt17(r_parameter(p, TimePoint(t))) << "\n";
        }
    } else {
        if (!(cfg.log10_eta_max > cfg.log10_eta_min))
            throw usage_error("rsweep: need log10_eta_max > log10_eta_min");
        std::vector<double> etas;
        for (int i = 0; i < cfg.points; ++i)
            etas.push_back(std::pow(10.0, cfg.log10_eta_min + (cfg.log10_eta_max -
                                          cfg.log10_eta_min) * i / (cfg.points - 1)));
        // include the closed-form minimum position when it lies in range
        const double eta_min = std::sqrt(cfg.beta);
        bool already = false;
        for (double eta : etas)
            if (std::fabs(eta - eta_min) <= 1e-14 * eta_min) already = true;
        if (!already && eta_min > etas.front() && eta_min < etas.back())
            etas.push_back(eta_min);
        std::sort(etas.begin(), etas.end());
        os << "eta,R\n";
        for (double eta : etas) {
            const Params p = make_params(eta, cfg.beta, cfg.tau_spr);
            os << fmt17(eta) << "," << fmt17(r_parameter(p, TimePoint(0.0))) << "\n";
        }
    }
    write_file(cfg.out, os.str());
    return 0;
}

// density: sampled grid of the chosen model, CSV (or JSON envelope when
// the output path ends in .json).
inline int run_density(const RunConfig& cfg) {
    require_out(cfg);
    const Params p = cfg.params();
    const TimePoint t(cfg.t);
    DensityGrid d;
    if (cfg.model == "full_1d") {
        d = sample_density(default_grid_full_1d(p, t, cfg.grid, cfg.extent_sigmas,
                                                cfg.two_sided),
                           t, p, CoordModel::full_1d, cfg.two_sided);
    } else if (cfg.model == "gaussian_1d") {
        d = sample_density(
            default_grid_gaussian_1d(p, t, cfg.grid, cfg.extent_sigmas, cfg.gauss_width), t, p,
            CoordModel::gaussian_1d, false, cfg.gauss_width);
    } else if (cfg.model == "momentum_lorentz" || cfg.model == "momentum_gauss") {
        const MomentumForm form = (cfg.model == "momentum_lorentz") ? MomentumForm::lorentz
                                                                    : MomentumForm::gauss;
        d = sample_momentum_density(default_grid_momentum(p, cfg.grid, cfg.extent_sigmas), p,
                                    form);
    } else {
        throw usage_error("density: unknown model '" + cfg.model + "'");
    }
    if (cfg.out.size() > 5 && cfg.out.substr(cfg.out.size() - 5) == ".json") {
        nlohmann::ordered_json j = to_json(d);
        j["config"] = nlohmann::ordered_json::parse(cfg.echo());
        write_file(cfg.out, j.dump() + "\n");
    } else {
        std::ostringstream os;
        write_density_csv(os, d, cfg.echo());
        write_file(cfg.out, os.str());
    }
    return 0;
}

// schmidt: SVD Schmidt number of the Gaussian model vs the closed-form R0,
// with a half-resolution convergence probe.
inline int run_schmidt(const RunConfig& cfg) {
    require_out(cfg);
    const Params p = cfg.params();
    const TimePoint t(cfg.t);
    const AmplitudeGrid amp = sample_gaussian_amplitude(
        default_grid_gaussian_1d(p, t, cfg.grid, cfg.extent_sigmas, cfg.gauss_width), t, p,
        cfg.gauss_width);
    const SchmidtResult sr = schmidt_number_svd(amp);
    const AmplitudeGrid half = sample_gaussian_amplitude(
        default_grid_gaussian_1d(p, t, std::max(2, cfg.grid / 2), cfg.extent_sigmas,
                                 cfg.gauss_width),
        t, p, cfg.gauss_width);
    const SchmidtResult sr_half = schmidt_number_svd(half);

    EntanglementReport rep = uncertainty_products(p, t);
    rep.K = sr.K;
    rep.singular_spectrum = sr.spectrum;
    rep.tail_coverage_warning = sr.tail_coverage_warning;
    rep.grid_shift = std::fabs(sr.K - sr_half.K) / sr.K;

    nlohmann::ordered_json j = to_json(rep);
    j["rel_diff_K_vs_R0"] = std::fabs(sr.K - rep.R0) / rep.R0;
    j["convergence_warning"] = (rep.grid_shift > 0.005);
    j["config"] = nlohmann::ordered_json::parse(cfg.echo());
    write_file(cfg.out, j.dump(2) + "\n");
    return 0;
}

// uncertainty: conditional/Heisenberg products over a time sweep, with
// bound violations marked and reflected in the exit code.
inline int run_uncertainty(const RunConfig& cfg, std::ostream& diag = std::cerr) {
    require_out(cfg);
    if (cfg.points < 2) throw usage_error("uncertainty: need points >= 2");
    const Params p = cfg.params();
    const double t_hi = (cfg.t_max > 0.0) ? cfg.t_max : 10.0 * p.tau_spr;
    const double tol = 1e-12;
    int violations = 0;
    std::ostringstream os;
    os << "# command=uncertainty, eta0=" << fmt17(p.eta0) << ", beta=" << fmt17(p.beta)
       << ", tau_spr=" << fmt17(p.tau_spr) << "\n";
    os << "# config: " << cfg.echo() << "\n";
    os << "t,eta_t,R_t,K,cond_ph,cond_at,lower_bound\n";
    for (int i = 0; i < cfg.points; ++i) {
        const double t = t_hi * i / (cfg.points - 1);
        const EntanglementReport rep = uncertainty_products(p, TimePoint(t));
        const double invK = 1.0 / rep.K;
        const bool bad = !(rep.products.cond_ph >= rep.bounds.lower * (1.0 - tol) &&
                           rep.products.cond_ph < 1.0 &&
                           rep.products.cond_at <= invK * (1.0 + tol) && invK <= 1.0 + tol);
        if (bad) {
            ++violations;
            diag << "uncertainty: bound violation at t=" << fmt17(t) << "\n";
        }
        os << fmt17(t) << "," << fmt17(eta_at(p, TimePoint(t))) << "," << fmt17(rep.R_t) << ","
           << fmt17(rep.K) << "," << fmt17(rep.products.cond_ph) << ","
           << fmt17(rep.products.cond_at) << "," << fmt17(rep.bounds.lower) << "\n";
    }
    os << "# violations=" << violations << "\n";
    write_file(cfg.out, os.str());
    return violations == 0 ? 0 : 1;
}

// verify: run the acceptance checks, print one line per criterion, leave
// the reference artifacts in the output directory.
inline int run_verify(const RunConfig& cfg, std::ostream& out = std::cout) {
    const std::string dir = cfg.out.empty() ? "verify_out" : cfg.out;
    std::filesystem::create_directories(dir);
    verify::write_verify_artifacts(dir + "/artifacts");
    const auto results = verify::run_acceptance(dir + "/scratch");
    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out << (r.passed ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << r.name;
        if (!r.passed) {
            out << " -- " << r.detail;
            ++failures;
        }
        out << "\n";
    }
    out << (failures == 0 ? "verify: all criteria passed\n"
                          : "verify: " + std::to_string(failures) + " criterion(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace atomphoton::cli

#endif
