#ifndef ATOMPHOTON_IO_HPP
#define ATOMPHOTON_IO_HPP

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "atomphoton/entanglement.hpp"
#include "atomphoton/grid.hpp"
#include "atomphoton/widths.hpp"

// File formats: CSV with '#'-prefixed header lines, '.' decimal, all
// numbers at 17 significant digits; reports and grid envelopes as JSON.
// Pure formatting -- identical inputs serialize to identical bytes.

namespace atomphoton {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string meta_header(const GridMeta& m) {
    return "# model=" + m.model + ", eta0=" + fmt17(m.eta0) + ", beta=" + fmt17(m.beta) +
           ", tau_spr=" + fmt17(m.tau_spr) + ", t=" + fmt17(m.t);
}

inline void write_density_csv(std::ostream& os, const DensityGrid& d,
                              const std::string& config_echo = "") {
    os << meta_header(d.meta) << "\n";
    if (!config_echo.empty()) os << "# config: " << config_echo << "\n";
    os << d.meta.axis_x << "," << d.meta.axis_y << ",density\n";
    for (int i = 0; i < d.grid.nx; ++i)
        for (int j = 0; j < d.grid.ny; ++j)
            os << fmt17(d.grid.x(i)) << "," << fmt17(d.grid.y(j)) << "," << fmt17(d.at(i, j))
               << "\n";
}

inline nlohmann::ordered_json to_json(const Grid2D& g) {
    return {{"nx", g.nx},       {"ny", g.ny},       {"x_min", g.x_min}, {"x_max", g.x_max},
            {"y_min", g.y_min}, {"y_max", g.y_max}};
}

inline nlohmann::ordered_json to_json(const GridMeta& m) {
    return {{"model", m.model},     {"eta0", m.eta0},           {"beta", m.beta},
            {"tau_spr", m.tau_spr}, {"t", m.t},                 {"rel_width", m.rel_width},
            {"two_sided", m.two_sided}, {"axis_x", m.axis_x},   {"axis_y", m.axis_y}};
}

inline nlohmann::ordered_json to_json(const DensityGrid& d) {
    nlohmann::ordered_json j;
    j["grid"] = to_json(d.grid);
    j["meta"] = to_json(d.meta);
    j["values"] = d.values;
    return j;
}

inline nlohmann::ordered_json to_json(const Params& p) {
    return {{"eta0", p.eta0}, {"beta", p.beta}, {"tau_spr", p.tau_spr}};
}

inline nlohmann::ordered_json to_json(const WidthReport& r) {
    nlohmann::ordered_json j;
    j["coinc_ph"] = r.coinc_ph;
    j["single_ph"] = r.single_ph;
    j["coinc_at"] = r.coinc_at;
    j["single_at"] = r.single_at;
    j["rel_coinc_ph"] = r.rel_coinc_ph;
    j["rel_single_ph"] = r.rel_single_ph;
    j["rel_coinc_at"] = r.rel_coinc_at;
    j["rel_single_at"] = r.rel_single_at;
    j["source"] = (r.source == WidthSource::analytic) ? "analytic" : "numeric";
    j["space"] = (r.space == WidthSpace::coordinate) ? "coordinate" : "momentum";
    j["params"] = to_json(r.params);
    j["t"] = r.t;
    j["validity_warning"] = r.validity_warning;
    return j;
}

// Singular spectrum truncated at p_n < 1e-8 in serialized reports; the
// in-memory result keeps the full spectrum.
inline nlohmann::ordered_json to_json(const EntanglementReport& r,
                                      double spectrum_floor = 1e-8) {
    nlohmann::ordered_json j;
    j["K"] = r.K;
    j["R0"] = r.R0;
    j["R_t"] = r.R_t;
    std::vector<double> spec;
    for (double pn : r.singular_spectrum) {
        if (pn < spectrum_floor) break;
        spec.push_back(pn);
    }
    j["singular_spectrum"] = spec;
    j["products"] = {{"heis_ph", r.products.heis_ph},
                     {"heis_at", r.products.heis_at},
                     {"cond_ph", r.products.cond_ph},
                     {"cond_at", r.products.cond_at}};
    j["bounds"] = {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}};
    j["t"] = r.t;
    j["validity_warning"] = r.validity_warning;
    j["tail_coverage_warning"] = r.tail_coverage_warning;
    j["grid_shift"] = r.grid_shift;
    return j;
}

inline void write_intervals_csv(std::ostream& os, const std::vector<HiddenInterval>& intervals,
                                const std::string& config_echo = "") {
    if (!config_echo.empty()) os << "# config: " << config_echo << "\n";
    os << "t_start,t_end,eta_start,eta_end\n";
    for (const auto& iv : intervals)
        os << fmt17(iv.t_start) << "," << fmt17(iv.t_end) << "," << fmt17(iv.eta_start) << ","
           << fmt17(iv.eta_end) << "\n";
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << contents;
    if (!os) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace atomphoton

#endif
