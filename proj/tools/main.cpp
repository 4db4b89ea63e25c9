// Command-line front end: scatter / bound / density / phase emit deterministic
// CSV or JSON artifacts, verify runs the invariant suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirac1d/jobs.hpp"
#include "dirac1d/verify.hpp"
#include "dirac1d/version.hpp"

namespace {

using dirac1d::JobConfig;
using dirac1d::Species;
using dirac1d::SweepKind;

struct VerbOptions {
    JobConfig cfg;
    std::vector<std::string> impurity_specs;
    std::string format = "csv";
    std::string out_path;
};

// Accepts each site as one 'position,q,lambda' argument; config files split
// such values on commas, so the tokens are re-joined and grouped in threes.
std::vector<dirac1d::Impurity> parse_impurities(const std::vector<std::string>& specs)
{
    std::vector<double> nums;
    for (const std::string& spec : specs) {
        std::size_t start = 0;
        while (start <= spec.size()) {
            const std::size_t comma = spec.find(',', start);
            const std::string tok =
                spec.substr(start, comma == std::string::npos ? comma : comma - start);
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0')
                throw CLI::ValidationError(
                    "--impurity", "expected 'position,q,lambda', got '" + spec + "'");
            nums.push_back(v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (nums.size() % 3 != 0)
        throw CLI::ValidationError("--impurity",
                                   "each site needs exactly three values: position,q,lambda");
    std::vector<dirac1d::Impurity> out;
    for (std::size_t i = 0; i < nums.size(); i += 3)
        out.push_back({nums[i], {nums[i + 1], nums[i + 2]}});
    return out;
}

void add_common(CLI::App* cmd, VerbOptions& o)
{
    cmd->fallthrough();  // lets --config appear after the verb
    cmd->add_option("--mass", o.cfg.mass, "Particle mass (sets all units)")
        ->capture_default_str();
    cmd->add_option("--Q", o.cfg.Q, "Charge unit of the density")->capture_default_str();
    cmd->add_option("--species", o.cfg.species, "electron or positron")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Species>{{"electron", Species::Electron},
                                           {"positron", Species::Positron}},
            CLI::ignore_case))
        ->default_str("electron");
    cmd->add_option("--impurity", o.impurity_specs,
                    "Impurity as 'position,q,lambda'; repeat for arrays")
        ->take_all();
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", o.out_path, "Output file (default: stdout)");
}

void add_k_grid(CLI::App* cmd, VerbOptions& o)
{
    cmd->add_option("--k_min", o.cfg.k_grid.lo, "Lowest momentum (> 0)")
        ->capture_default_str();
    cmd->add_option("--k_max", o.cfg.k_grid.hi, "Highest momentum")
        ->capture_default_str();
    cmd->add_option("--n_k", o.cfg.k_grid.n, "Number of momentum samples")
        ->capture_default_str();
}

JobConfig finish(VerbOptions& o)
{
    o.cfg.impurities = parse_impurities(o.impurity_specs);
    return o.cfg;
}

int emit(const dirac1d::Table& t, const VerbOptions& o)
{
    const std::string text = dirac1d::render(t, o.format);
    if (o.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << o.out_path << "' for writing\n";
        return 1;
    }
    f << text;
    return f.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(dirac1d::kVersion) +
                 ": spectra of the 1D Dirac equation with point impurities"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "INI config file; one section per verb, keys match the long flags");
    app.set_version_flag("--version", dirac1d::kVersion);

    VerbOptions sc, bo, de, ph;

    CLI::App* scatter = app.add_subcommand(
        "scatter", "Transmission and reflection amplitudes over a momentum grid");
    add_common(scatter, sc);
    add_k_grid(scatter, sc);

    CLI::App* bound =
        app.add_subcommand("bound", "Bound states of the array, or a coupling sweep");
    add_common(bound, bo);
    bound
        ->add_option("--sweep", bo.cfg.sweep,
                     "Sweep a single coupling instead of solving the array: q or lambda")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, SweepKind>{{"none", SweepKind::None},
                                             {"q", SweepKind::Electrostatic},
                                             {"lambda", SweepKind::MassSpike}},
            CLI::ignore_case))
        ->default_str("none");
    bound->add_option("--sweep_min", bo.cfg.sweep_grid.lo, "Sweep lower bound");
    bound->add_option("--sweep_max", bo.cfg.sweep_grid.hi, "Sweep upper bound");
    bound->add_option("--sweep_n", bo.cfg.sweep_grid.n, "Sweep sample count");

    CLI::App* density =
        app.add_subcommand("density", "Charge density of one bound state over an x-grid");
    add_common(density, de);
    density->add_option("--x_min", de.cfg.x_grid.lo, "Left edge of the x-grid");
    density->add_option("--x_max", de.cfg.x_grid.hi, "Right edge of the x-grid");
    density->add_option("--n_x", de.cfg.x_grid.n,
                        "Number of x samples (omit for the default grid)");
    density->add_option("--state_index", de.cfg.state_index,
                        "Which bound state, by increasing kappa_b")
        ->capture_default_str();

    CLI::App* phase = app.add_subcommand(
        "phase", "Phase shifts of a single pure-type impurity over a momentum grid");
    add_common(phase, ph);
    add_k_grid(phase, ph);

    CLI::App* verify =
        app.add_subcommand("verify", "Run the full invariant suite and print pass/fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            bool all = true;
            for (const dirac1d::CheckResult& r : dirac1d::run_verification()) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail
                          << ")\n";
                all = all && r.pass;
            }
            std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
            return all ? 0 : 2;
        }
        if (scatter->parsed()) return emit(dirac1d::run_scatter(finish(sc)), sc);
        if (bound->parsed()) return emit(dirac1d::run_bound(finish(bo)), bo);
        if (density->parsed()) return emit(dirac1d::run_density(finish(de)), de);
        if (phase->parsed()) return emit(dirac1d::run_phase(finish(ph)), ph);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
