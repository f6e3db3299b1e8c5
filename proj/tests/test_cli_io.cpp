#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "atomphoton/cli.hpp"
#include "atomphoton/io.hpp"

using namespace atomphoton;
namespace fs = std::filesystem;

namespace {

std::string scratch_path(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "atomphoton_cli_tests";
    fs::create_directories(dir);
    return (dir / name).string();
}

std::vector<std::string> data_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_of("0123456789-") != 0) continue;  // column header row
        rows.push_back(line);
    }
    return rows;
}

std::vector<double> split_row(const std::string& row) {
    std::vector<double> out;
    std::istringstream is(row);
    std::string cell;
    while (std::getline(is, cell, ',')) out.push_back(std::strtod(cell.c_str(), nullptr));
    return out;
}

}  // namespace

TEST_CASE("fmt17 round-trips doubles exactly") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567, -2.5e17}) {
        CHECK(std::strtod(fmt17(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("density CSV header carries the pinned metadata line") {
    const Params p = make_params(0.05, 0.1, 100.0);
    const TimePoint t(5.0);
    const DensityGrid d =
        sample_density(default_grid_full_1d(p, t, 32), t, p, CoordModel::full_1d);
    std::ostringstream os;
    write_density_csv(os, d);
    const std::string text = os.str();
    double e = 0, b = 0, ts = 0, tt = 0;
    CHECK(std::sscanf(text.c_str(), "# model=full_1d, eta0=%lf, beta=%lf, tau_spr=%lf, t=%lf",
                      &e, &b, &ts, &tt) == 4);
    CHECK(e == 0.05);
    CHECK(b == 0.1);
    CHECK(ts == 100.0);
    CHECK(tt == 5.0);
    CHECK(text.find("x_at,x_ph,density\n") != std::string::npos);
    const auto rows = data_rows(text);
    CHECK(rows.size() == 32u * 32u);
    // first data row is the first grid node, exactly round-tripped
    const auto cells = split_row(rows[0]);
    CHECK(cells[0] == d.grid.x(0));
    CHECK(cells[1] == d.grid.y(0));
    CHECK(cells[2] == d.at(0, 0));
}

TEST_CASE("density JSON envelope: grid block plus flat value array") {
    const Params p = make_params(0.2, 0.5, 10.0);
    const DensityGrid d = sample_momentum_density(default_grid_momentum(p, 16), p,
                                                  MomentumForm::gauss);
    const nlohmann::ordered_json j = to_json(d);
    CHECK(j["grid"]["nx"] == 16);
    CHECK(j["values"].size() == 256u);
    CHECK(j["meta"]["axis_x"] == "u");
}

TEST_CASE("run_widths: sweep file, beta=1 mirror symmetry, usage errors") {
    cli::RunConfig cfg;
    cfg.beta = 1.0;
    cfg.log10_eta_min = -3.0;
    cfg.log10_eta_max = 3.0;
    cfg.points = 121;
    cfg.out = scratch_path("widths.csv");
    CHECK(cli::run_widths(cfg) == 0);
    const auto rows = data_rows(read_file(cfg.out));
    REQUIRE(rows.size() == 121u);
    // at beta = 1 the atom curves are the photon curves mirrored in log eta
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto a = split_row(rows[i]);
        const auto b = split_row(rows[rows.size() - 1 - i]);
        CHECK(a[1] == doctest::Approx(b[3]).epsilon(1e-12));  // coinc_ph(eta) = coinc_at(1/eta)
        CHECK(a[2] == doctest::Approx(b[4]).epsilon(1e-12));  // single_ph(eta) = single_at(1/eta)
    }

    cli::RunConfig bad = cfg;
    bad.points = 1;
    CHECK_THROWS_AS(cli::run_widths(bad), cli::usage_error);
    bad = cfg;
    bad.log10_eta_max = bad.log10_eta_min;
    CHECK_THROWS_AS(cli::run_widths(bad), cli::usage_error);
    bad = cfg;
    bad.out.clear();
    CHECK_THROWS_AS(cli::run_widths(bad), cli::usage_error);
}

TEST_CASE("run_rsweep: injected minimum row and down-conversion value") {
    {
        cli::RunConfig cfg;
        cfg.beta = 1e-4;
        cfg.log10_eta_min = -8.0;
        cfg.log10_eta_max = 8.0;
        cfg.points = 161;
        cfg.out = scratch_path("rsweep.csv");
        CHECK(cli::run_rsweep(cfg) == 0);
        const auto rows = data_rows(read_file(cfg.out));
        double min_R = 1e300, min_eta = 0.0;
        int direction_changes = 0;
        double prev_R = 0.0;
        int prev_dir = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto cells = split_row(rows[i]);
            if (cells[1] < min_R) min_R = cells[1], min_eta = cells[0];
            if (i > 0) {
                const int dir = (cells[1] > prev_R) ? 1 : -1;
                if (prev_dir != 0 && dir != prev_dir) ++direction_changes;
                prev_dir = dir;
            }
            prev_R = cells[1];
        }
        CHECK(min_R == doctest::Approx(1.0 + cfg.beta).epsilon(1e-6));
        CHECK(min_eta == doctest::Approx(std::sqrt(cfg.beta)).epsilon(1e-12));
        CHECK(direction_changes == 1);
    }
    {
        cli::RunConfig cfg;
        cfg.beta = 1.0;
        cfg.log10_eta_min = -2.0;
        cfg.log10_eta_max = 2.0;
        cfg.points = 81;
        cfg.out = scratch_path("rsweep_dc.csv");
        CHECK(cli::run_rsweep(cfg) == 0);
        for (const auto& row : data_rows(read_file(cfg.out))) {
            const auto cells = split_row(row);
            if (std::fabs(cells[0] - 1.0) < 1e-12)
                CHECK(cells[1] == doctest::Approx(2.0).epsilon(1e-12));
        }
    }
    {
        // time parameterization: t,eta,R columns with eta non-decreasing
        cli::RunConfig cfg;
        cfg.eta0 = 1e-3;
        cfg.beta = 1e-4;
        cfg.tau_spr = 50.0;
        cfg.t_max = 500.0;
        cfg.points = 101;
        cfg.out = scratch_path("rsweep_t.csv");
        CHECK(cli::run_rsweep(cfg) == 0);
        const auto rows = data_rows(read_file(cfg.out));
        REQUIRE(rows.size() == 101u);
        double last_eta = 0.0;
        for (const auto& row : rows) {
            const auto cells = split_row(row);
            CHECK(cells.size() == 3u);
            CHECK(cells[1] >= last_eta);
            last_eta = cells[1];
        }
    }
}

TEST_CASE("run_density: causal support band and symmetric momentum output") {
    {
        cli::RunConfig cfg;  // reference parameters: eta0=0.05, beta=0.1, t=5
        cfg.grid = 128;
        cfg.model = "full_1d";
        cfg.out = scratch_path("density.csv");
        CHECK(cli::run_density(cfg) == 0);
        for (const auto& row : data_rows(read_file(cfg.out))) {
            const auto cells = split_row(row);
            const double u = cells[1] - cells[0];
            if (cells[2] > 0.0) {
                CHECK(u >= 0.0);
                CHECK(u <= cfg.t);
            }
        }
    }
    {
        cli::RunConfig cfg;
        cfg.eta0 = 1.0;
        cfg.beta = 1.0;
        cfg.model = "momentum_gauss";
        cfg.grid = 64;
        cfg.out = scratch_path("density_mom.json");
        CHECK(cli::run_density(cfg) == 0);
        const auto j = nlohmann::json::parse(read_file(cfg.out));
        const auto& vals = j["values"];
        const int n = j["grid"]["nx"].get<int>();
        for (int i = 0; i < n; i += 5)
            for (int k = 0; k < n; k += 5)
                CHECK(vals[i * n + k].get<double>() ==
                      doctest::Approx(vals[(n - 1 - i) * n + (n - 1 - k)].get<double>())
                          .epsilon(1e-12));
    }
    {
        cli::RunConfig cfg;  // symmetric emission variant occupies both quadrants
        cfg.model = "full_1d";
        cfg.two_sided = true;
        cfg.grid = 96;
        cfg.out = scratch_path("density_2s.csv");
        CHECK(cli::run_density(cfg) == 0);
        bool saw_negative_u = false, saw_positive_u = false;
        for (const auto& row : data_rows(read_file(cfg.out))) {
            const auto cells = split_row(row);
            const double u = cells[1] - cells[0];
            if (cells[2] > 0.0) {
                CHECK(std::fabs(u) <= cfg.t);
                saw_negative_u = saw_negative_u || u < 0.0;
                saw_positive_u = saw_positive_u || u > 0.0;
            }
        }
        CHECK(saw_negative_u);
        CHECK(saw_positive_u);
    }
    {
        cli::RunConfig cfg;
        cfg.model = "nonsense";
        cfg.out = scratch_path("x.csv");
        CHECK_THROWS_AS(cli::run_density(cfg), cli::usage_error);
    }
}

TEST_CASE("run_schmidt: report fields and small-beta agreement") {
    cli::RunConfig cfg;
    cfg.eta0 = 0.05;
    cfg.beta = 0.01;
    cfg.t = 0.0;
    cfg.grid = 256;
    cfg.out = scratch_path("schmidt.json");
    CHECK(cli::run_schmidt(cfg) == 0);
    const auto j = nlohmann::json::parse(read_file(cfg.out));
    CHECK(j["rel_diff_K_vs_R0"].get<double>() < 0.01);
    CHECK(j["K"].get<double>() > 1.0);
    CHECK(j["R0"].get<double>() ==
          doctest::Approx(r_parameter(cfg.params(), TimePoint(0.0))).epsilon(1e-12));
    CHECK(j.contains("convergence_warning"));
    CHECK(j["convergence_warning"].get<bool>() == false);
    CHECK(j["grid_shift"].get<double>() < 0.005);
    // serialized spectrum is truncated at 1e-8
    for (const auto& pn : j["singular_spectrum"]) CHECK(pn.get<double>() >= 1e-8);
}

TEST_CASE("run_uncertainty: no violations, saturated t=0 row, asymptotics") {
    cli::RunConfig cfg;  // eta0=0.05, beta=0.1, tau_spr=100
    cfg.points = 201;
    cfg.out = scratch_path("uncertainty.csv");
    std::ostringstream diag;
    CHECK(cli::run_uncertainty(cfg, diag) == 0);
    const std::string text = read_file(cfg.out);
    CHECK(text.find("# violations=0\n") != std::string::npos);
    const auto rows = data_rows(text);
    REQUIRE(rows.size() == 201u);
    const auto first = split_row(rows.front());
    const double K = first[3];
    CHECK(first[4] == doctest::Approx(1.0 / K).epsilon(1e-12));  // cond_ph
    CHECK(first[5] == doctest::Approx(1.0 / K).epsilon(1e-12));  // cond_at
    const auto last = split_row(rows.back());
    CHECK(last[4] > first[4]);  // cond_ph grows toward 1
    CHECK(last[4] < 1.0);
    CHECK(last[5] < first[5]);  // cond_at falls toward 0
}

TEST_CASE("width report JSON: explicit fields, source/space tags, params") {
    const Params p = make_params(0.05, 0.1, 100.0);
    const nlohmann::ordered_json j = to_json(analytic_coord_widths(p, TimePoint(2.0)));
    CHECK(j["source"] == "analytic");
    CHECK(j["space"] == "coordinate");
    CHECK(j["params"]["eta0"] == 0.05);
    CHECK(j["coinc_ph"].get<double>() > 0.0);
    CHECK(j["rel_single_at"].get<double>() >= 1.0);
    CHECK(j["validity_warning"] == true);  // t = 2 < long-time threshold
    const nlohmann::ordered_json jm = to_json(analytic_momentum_widths(p));
    CHECK(jm["space"] == "momentum");
    CHECK(jm["validity_warning"] == false);
}

TEST_CASE("hidden-entanglement intervals serialize to the four-column CSV") {
    const Params p = make_params(1e-3, 0.05, 1.0);
    const auto intervals = hidden_entanglement_scan(p, TimeRange{0.0, 1000.0, 1001});
    REQUIRE(!intervals.empty());
    std::ostringstream os;
    write_intervals_csv(os, intervals, "scan");
    const std::string text = os.str();
    CHECK(text.find("t_start,t_end,eta_start,eta_end\n") != std::string::npos);
    const auto rows = data_rows(text);
    REQUIRE(rows.size() == intervals.size());
    const auto cells = split_row(rows[0]);
    CHECK(cells.size() == 4u);
    CHECK(cells[0] == intervals[0].t_start);
    CHECK(cells[3] == intervals[0].eta_end);
}

TEST_CASE("schmidt report's convergence warning tracks the grid-shift policy") {
    for (int grid : {64, 256}) {
        cli::RunConfig cfg;
        cfg.eta0 = 0.05;
        cfg.beta = 0.01;
        cfg.t = 0.0;
        cfg.grid = grid;
        cfg.out = scratch_path("schmidt_shift.json");
        CHECK(cli::run_schmidt(cfg) == 0);
        const auto j = nlohmann::json::parse(read_file(cfg.out));
        CHECK(j["convergence_warning"].get<bool>() ==
              (j["grid_shift"].get<double>() > 0.005));
    }
}

TEST_CASE("config file values load and are overridden by explicit assignment") {
    const std::string path = scratch_path("config.json");
    write_file(path, R"({"eta0": 0.2, "beta": 0.7, "grid": 64, "model": "gaussian_1d"})");
    cli::RunConfig cfg;
    cli::apply_config_file(cfg, path);
    CHECK(cfg.eta0 == 0.2);
    CHECK(cfg.beta == 0.7);
    CHECK(cfg.grid == 64);
    CHECK(cfg.model == "gaussian_1d");
    CHECK(cfg.tau_spr == 100.0);  // untouched default
}

TEST_CASE("rerunning a command produces byte-identical output") {
    cli::RunConfig cfg;
    cfg.model = "gaussian_1d";
    cfg.grid = 96;
    cfg.out = scratch_path("det_a.csv");
    CHECK(cli::run_density(cfg) == 0);
    cfg.out = scratch_path("det_b.csv");
    CHECK(cli::run_density(cfg) == 0);
    CHECK(read_file(scratch_path("det_a.csv")) == read_file(scratch_path("det_b.csv")));
}

TEST_CASE("every output begins with '#' header lines echoing the config") {
    cli::RunConfig cfg;
    cfg.out = scratch_path("hdr.csv");
    cfg.points = 11;
    cfg.log10_eta_min = -2;
    cfg.log10_eta_max = 2;
    CHECK(cli::run_widths(cfg) == 0);
    const std::string text = read_file(cfg.out);
    CHECK(text[0] == '#');
    CHECK(text.find("# config: {\"eta0\":") != std::string::npos);
}
