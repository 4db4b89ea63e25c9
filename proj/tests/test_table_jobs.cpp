#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirac1d/jobs.hpp"

using namespace dirac1d;

namespace {

constexpr double pi = std::numbers::pi;

JobConfig one_impurity(double q, double lambda)
{
    JobConfig cfg;
    cfg.impurities = {{0.0, {q, lambda}}};
    return cfg;
}

int column_index(const Table& t, const std::string& name)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

const Cell* find_check(const Table& t, const std::string& name)
{
    for (const auto& [key, val] : t.checks)
        if (key == name) return &val;
    return nullptr;
}

double check_value(const Table& t, const std::string& name)
{
    const Cell* c = find_check(t, name);
    REQUIRE(c != nullptr);
    REQUIRE(std::holds_alternative<double>(*c));
    return std::get<double>(*c);
}

// Data rows of the CSV body (skips '#' metadata and the header row).
std::vector<std::vector<std::string>> csv_data_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        out.push_back(std::move(fields));
    }
    return out;
}

}  // namespace

TEST_CASE("format_double round-trips and renders deterministically")
{
    for (double x : {0.0, 1.0, -1.0 / 3.0, 1e-300, 123456.789, pi}) {
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
        CHECK(format_double(x) == s);
    }
}

TEST_CASE("table rejects rows of the wrong width")
{
    Table t;
    t.columns = {"a", "b"};
    CHECK_NOTHROW(t.add_row({1.0, 2.0}));
    CHECK_THROWS(t.add_row({1.0}));
}

TEST_CASE("CSV and JSON renderings of the same table carry identical numbers")
{
    JobConfig cfg = one_impurity(1.1, -0.4);
    cfg.k_grid = {0.1, 5.0, 7};
    const Table t = run_scatter(cfg);

    const std::string csv = to_csv(t);
    const auto j = nlohmann::ordered_json::parse(to_json(t));

    const auto rows = csv_data_rows(csv);
    REQUIRE(rows.size() == t.rows.size());
    REQUIRE(j["rows"].size() == t.rows.size());
    REQUIRE(j["columns"].size() == t.columns.size());

    for (std::size_t r = 0; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            const Cell& cell = t.rows[r][c];
            if (std::holds_alternative<double>(cell)) {
                const double want = std::get<double>(cell);
                CHECK(std::strtod(rows[r][c].c_str(), nullptr) == want);
                CHECK(j["rows"][r][c].get<double>() == want);
            } else if (std::holds_alternative<std::string>(cell)) {
                CHECK(rows[r][c] == std::get<std::string>(cell));
                CHECK(j["rows"][r][c].get<std::string>() == std::get<std::string>(cell));
            }
        }
    }

    // render is a pure function of the table
    CHECK(to_csv(t) == csv);
    CHECK(render(t, "csv") == csv);
    CHECK(render(t, "json") == j.dump(2) + "\n");
    CHECK_THROWS(render(t, "yaml"));
}

TEST_CASE("scatter: free line transmits everything, q = pi/2 splits fifty-fifty at k = m")
{
    JobConfig free_cfg = one_impurity(0.0, 0.0);
    free_cfg.k_grid = {0.5, 2.0, 4};
    const Table ft = run_scatter(free_cfg);
    const int a2s = column_index(ft, "abs2_sigma");
    for (const auto& row : ft.rows)
        CHECK(std::get<double>(row[a2s]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(check_value(ft, "max_unitarity_residual") < 1e-14);

    JobConfig cfg = one_impurity(pi / 2.0, 0.0);
    cfg.k_grid = {1.0, 2.0, 2};
    const Table t = run_scatter(cfg);
    REQUIRE(t.rows.size() == 4);  // two k values, both incidence sides
    const int a2r = column_index(t, "abs2_rho");
    CHECK(std::get<double>(t.rows[0][column_index(t, "abs2_sigma")])
          == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::get<double>(t.rows[0][a2r]) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::get<std::string>(t.rows[0][column_index(t, "path")]) == "analytic");

    // an off-origin site forces the numeric path but the same |sigma|^2
    JobConfig off = cfg;
    off.impurities[0].position = 0.7;
    const Table t2 = run_scatter(off);
    CHECK(std::get<std::string>(t2.rows[0][column_index(t2, "path")]) == "numeric");
    CHECK(std::get<double>(t2.rows[0][column_index(t2, "abs2_sigma")])
          == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("bound: single impurity lists one state per species at most")
{
    JobConfig cfg = one_impurity(2.0 * pi / 3.0, 0.0);
    const Table t = run_bound(cfg);
    REQUIRE(t.rows.size() == 1);
    CHECK(std::get<std::string>(t.rows[0][column_index(t, "species")]) == "electron");
    CHECK(std::get<double>(t.rows[0][column_index(t, "kappa_b")])
          == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(std::get<double>(t.rows[0][column_index(t, "omega_b")])
          == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::get<std::int64_t>(t.rows[0][column_index(t, "sign_flip")]) == -1);
    CHECK(std::get<double>(t.rows[0][column_index(t, "matching_residual")]) < 1e-10);
    const Cell* n_states = find_check(t, "n_states");
    REQUIRE(n_states != nullptr);
    CHECK(std::get<std::int64_t>(*n_states) == 1);
}

TEST_CASE("bound sweep over q reproduces the quadrant table")
{
    JobConfig cfg;
    cfg.sweep = SweepKind::Electrostatic;
    const Table t = run_bound(cfg);
    REQUIRE(t.rows.size() == 32);

    const int qc = column_index(t, "q");
    const int sc = column_index(t, "species");
    const int kc = column_index(t, "kappa_b");
    for (const auto& row : t.rows) {
        const double q = std::get<double>(row[qc]);
        const double r = std::fmod(q, 2.0 * pi);
        const bool positron = (r < pi / 2.0) || (r > pi && r < 3.0 * pi / 2.0);
        CHECK(std::get<std::string>(row[sc]) == (positron ? "positron" : "electron"));
        CHECK(std::get<double>(row[kc])
              == doctest::Approx(std::abs(std::sin(q))).epsilon(1e-12));
    }
    const Cell* pattern = find_check(t, "quadrant_species");
    REQUIRE(pattern != nullptr);
    CHECK(std::get<std::string>(*pattern) == "positron,electron,positron,electron");

    JobConfig bad = cfg;
    bad.impurities = {{0.0, {1.0, 0.0}}};
    CHECK_THROWS(run_bound(bad));
}

TEST_CASE("bound sweep over lambda: electron states exactly for negative lambda")
{
    JobConfig cfg;
    cfg.sweep = SweepKind::MassSpike;
    const Table t = run_bound(cfg);
    REQUIRE(t.rows.size() == 32);  // 33 samples, lambda = 0 contributes no state

    const int lc = column_index(t, "lambda");
    const int sc = column_index(t, "species");
    const int kc = column_index(t, "kappa_b");
    for (const auto& row : t.rows) {
        const double l = std::get<double>(row[lc]);
        CHECK(std::get<std::string>(row[sc]) == (l < 0.0 ? "electron" : "positron"));
        CHECK(std::get<double>(row[kc])
              == doctest::Approx(std::abs(std::tanh(l))).epsilon(1e-12));
    }
}

TEST_CASE("density: symmetric grid gives byte-identical mirror values and correct checks")
{
    JobConfig cfg = one_impurity(2.0 * pi / 3.0, 0.0);
    cfg.Q = 2.0;
    const Table t = run_density(cfg);

    const double kap = std::sqrt(3.0) / 2.0;
    CHECK(check_value(t, "kappa_b") == doctest::Approx(kap).epsilon(1e-13));
    CHECK(check_value(t, "j0_at_zero") == doctest::Approx(2.0 * kap).epsilon(1e-12));
    CHECK(check_value(t, "decay_rate") == doctest::Approx(2.0 * kap).epsilon(1e-12));
    CHECK(std::abs(check_value(t, "total_charge") - 2.0) < 2e-6);
    CHECK(check_value(t, "expected_total_charge") == 2.0);
    CHECK(find_check(t, "total_charge_trapezoid") != nullptr);
    CHECK(find_check(t, "matching_residual") != nullptr);

    const int xc = column_index(t, "x");
    const int jc = column_index(t, "j0");
    const std::size_t n = t.rows.size();
    REQUIRE(n == 2001);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string a = format_double(std::get<double>(t.rows[i][jc]));
        const std::string b = format_double(std::get<double>(t.rows[n - 1 - i][jc]));
        CHECK(a == b);
        CHECK(std::get<double>(t.rows[i][xc]) == -std::get<double>(t.rows[n - 1 - i][xc]));
    }

    // positron density is negative at the origin
    JobConfig pcfg = one_impurity(0.0, 1.0);
    pcfg.species = Species::Positron;  // lambda > 0 binds the positron
    const Table pt = run_density(pcfg);
    CHECK(check_value(pt, "j0_at_zero") < 0.0);
    CHECK(std::get<std::int64_t>(*find_check(pt, "charge_sign")) == -1);
    CHECK(std::abs(check_value(pt, "total_charge") + 1.0) < 2e-6);

    // no bound state anywhere: q = 0
    CHECK_THROWS(run_density(one_impurity(0.0, 0.0)));
    // state_index out of range
    JobConfig oob = one_impurity(2.0, 0.0);
    oob.state_index = 3;
    CHECK_THROWS(run_density(oob));
}

TEST_CASE("phase: closed-form residual stays tiny, numeric-path arrays are rejected")
{
    JobConfig cfg = one_impurity(1.2, 0.0);
    cfg.k_grid = {0.01, 10.0, 64};
    const Table t = run_phase(cfg);
    REQUIRE(t.rows.size() == 64);
    CHECK(check_value(t, "max_residual_guarded") < 1e-10);

    const int dc = column_index(t, "delta");
    const int pc = column_index(t, "delta_plus");
    const int mc = column_index(t, "delta_minus");
    for (const auto& row : t.rows)
        CHECK(std::get<double>(row[dc])
              == doctest::Approx(std::get<double>(row[pc]) + std::get<double>(row[mc]))
                     .epsilon(1e-13));

    // unwrapped phase has no pi-sized jumps between neighbouring k samples
    const int uc = column_index(t, "delta_unwrapped");
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const double step = std::abs(std::get<double>(t.rows[i][uc])
                                     - std::get<double>(t.rows[i - 1][uc]));
        CHECK(step < pi / 2.0);
    }

    CHECK_THROWS(run_phase(one_impurity(0.4, 0.3)));  // mixed coupling
    JobConfig off = one_impurity(1.0, 0.0);
    off.impurities[0].position = 0.5;
    CHECK_THROWS(run_phase(off));
}

TEST_CASE("configuration validation")
{
    JobConfig cfg = one_impurity(1.0, 0.0);
    cfg.mass = -1.0;
    CHECK_THROWS(run_scatter(cfg));

    JobConfig bad_grid = one_impurity(1.0, 0.0);
    bad_grid.k_grid = {-0.5, 2.0, 8};
    CHECK_THROWS(run_scatter(bad_grid));
    bad_grid.k_grid = {2.0, 0.5, 8};
    CHECK_THROWS(run_scatter(bad_grid));
    bad_grid.k_grid = {0.5, 2.0, 0};
    CHECK_THROWS(run_scatter(bad_grid));

    JobConfig none;
    CHECK_THROWS(run_scatter(none));  // no impurities, no sweep

    JobConfig qcfg = one_impurity(1.0, 0.0);
    qcfg.Q = 0.0;
    CHECK_THROWS(run_density(qcfg));
}
