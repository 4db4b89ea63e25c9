#include "dirac1d/jobs.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dirac1d/analytic_spectra.hpp"
#include "dirac1d/version.hpp"

namespace dirac1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Path { AnalyticElectrostatic, AnalyticMassSpike, Numeric };

// The closed forms cover exactly one pure-type impurity sitting at the origin;
// anything else goes through the transfer solver.
Path classify_path(const std::vector<Impurity>& imps)
{
    if (imps.size() != 1) return Path::Numeric;
    const Impurity& imp = imps.front();
    if (imp.position != 0.0) return Path::Numeric;
    if (imp.coupling.lambda == 0.0) return Path::AnalyticElectrostatic;
    if (imp.coupling.q == 0.0) return Path::AnalyticMassSpike;
    return Path::Numeric;
}

const char* path_name(Path p) { return p == Path::Numeric ? "numeric" : "analytic"; }

void validate_common(const JobConfig& cfg)
{
    if (!(cfg.mass > 0.0) || !std::isfinite(cfg.mass))
        throw std::invalid_argument("mass must be positive and finite");
    if (!(cfg.Q > 0.0) || !std::isfinite(cfg.Q))
        throw std::invalid_argument("Q must be positive and finite");
}

void validate_k_grid(const GridSpec& g)
{
    if (g.n < 2) throw std::invalid_argument("k-grid needs n_k >= 2");
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || !(g.lo < g.hi))
        throw std::invalid_argument("k-grid needs finite k_min < k_max");
    if (!(g.lo > 0.0)) throw std::invalid_argument("scattering jobs need k_min > 0");
}

void validate_x_grid(const GridSpec& g)
{
    if (g.n < 2) throw std::invalid_argument("x-grid needs n_x >= 2");
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || !(g.lo < g.hi))
        throw std::invalid_argument("x-grid needs finite x_min < x_max");
}

double grid_point(const GridSpec& g, int i)
{
    return g.lo + (g.hi - g.lo) * static_cast<double>(i) / (g.n - 1);
}

// Reflection-exact grid when the bounds are symmetric, so |x|-dependent
// columns are symmetric in the emitted bytes too.
std::vector<double> x_points(const GridSpec& g)
{
    std::vector<double> xs(g.n);
    for (int i = 0; i < g.n; ++i) {
        const int j = g.n - 1 - i;
        if (g.lo != -g.hi || i < j)
            xs[i] = grid_point(g, i);
        else if (i == j)
            xs[i] = 0.0;
        else
            xs[i] = -xs[j];
    }
    return xs;
}

std::string grid_echo(const GridSpec& g)
{
    return "min=" + format_double(g.lo) + " max=" + format_double(g.hi) +
           " n=" + std::to_string(g.n);
}

void echo_common(Table& t, const JobConfig& cfg)
{
    t.config.emplace_back("mass", format_double(cfg.mass));
    t.config.emplace_back("Q", format_double(cfg.Q));
    t.config.emplace_back("species", species_name(cfg.species));
    for (std::size_t i = 0; i < cfg.impurities.size(); ++i) {
        const Impurity& imp = cfg.impurities[i];
        t.config.emplace_back("impurity." + std::to_string(i + 1),
                              "position=" + format_double(imp.position) +
                                  " q=" + format_double(imp.coupling.q) +
                                  " lambda=" + format_double(imp.coupling.lambda));
    }
}

ImpurityArray make_array(const JobConfig& cfg)
{
    if (cfg.impurities.empty())
        throw std::invalid_argument("configuration needs at least one impurity");
    return ImpurityArray(cfg.impurities);
}

// Bound states of the configured array for one species, each with its
// matching residual, analytic or numeric as the path dictates.
std::vector<std::pair<BoundState, double>> states_for(const JobConfig& cfg, Species sp,
                                                      Path path, const ImpurityArray& arr)
{
    std::vector<std::pair<BoundState, double>> out;
    if (path == Path::Numeric) {
        for (const BoundState& bs : find_bound_states(arr, sp, cfg.mass))
            out.emplace_back(bs, matching_residual(bs, arr));
        return out;
    }
    const PointInteraction& pi = arr.sites.front().coupling;
    const std::optional<BoundState> s = (path == Path::AnalyticElectrostatic)
                                            ? electrostatic_bound_state(cfg.mass, pi.q)
                                            : mass_spike_bound_state(cfg.mass, pi.lambda);
    if (s && s->species == sp) out.emplace_back(*s, matching_residual(*s, pi));
    return out;
}

// Simpson weights for one (possibly uneven) interval pair.
double simpson_pair(double h1, double h2, double f0, double f1, double f2)
{
    return (h1 + h2) / 6.0 *
           ((2.0 - h2 / h1) * f0 + (h1 + h2) * (h1 + h2) / (h1 * h2) * f1 +
            (2.0 - h1 / h2) * f2);
}

}  // namespace

const char* species_name(Species s)
{
    return s == Species::Electron ? "electron" : "positron";
}

Table run_scatter(const JobConfig& cfg)
{
    validate_common(cfg);
    validate_k_grid(cfg.k_grid);
    const Path path = classify_path(cfg.impurities);
    const ImpurityArray arr = make_array(cfg);

    Table t;
    echo_common(t, cfg);
    t.config.emplace_back("k_grid", grid_echo(cfg.k_grid));
    t.config.emplace_back("path", path_name(path));
    t.columns = {"k",       "side",       "re_sigma", "im_sigma",
                 "re_rho",  "im_rho",     "abs2_sigma", "abs2_rho",
                 "unitarity_residual", "path"};

    double worst = 0.0;
    for (int i = 0; i < cfg.k_grid.n; ++i) {
        const double k = grid_point(cfg.k_grid, i);
        ScatteringResult right, left;
        if (path == Path::AnalyticElectrostatic) {
            right = electrostatic_amplitudes(cfg.mass, arr.sites.front().coupling.q, k,
                                             cfg.species);
            left = right;
        } else if (path == Path::AnalyticMassSpike) {
            right = mass_spike_amplitudes(cfg.mass, arr.sites.front().coupling.lambda, k,
                                          cfg.species);
            left = right;
        } else {
            const TwoSided two = s_matrix(arr, cfg.species, cfg.mass, k);
            right = two.right();
            left = two.left();
        }
        for (const auto& [side, amp] :
             {std::pair<const char*, ScatteringResult>{"right", right}, {"left", left}}) {
            const double res = amp.unitarity_residual();
            worst = std::max(worst, res);
            t.add_row({k, std::string(side), amp.sigma.real(), amp.sigma.imag(),
                       amp.rho.real(), amp.rho.imag(), std::norm(amp.sigma),
                       std::norm(amp.rho), res, path_name(path)});
        }
    }
    t.checks.emplace_back("max_unitarity_residual", worst);
    t.checks.emplace_back("n_rows", static_cast<std::int64_t>(t.rows.size()));
    return t;
}

Table run_bound(const JobConfig& cfg)
{
    validate_common(cfg);
    Table t;
    echo_common(t, cfg);

    if (cfg.sweep == SweepKind::None) {
        const Path path = classify_path(cfg.impurities);
        const ImpurityArray arr = make_array(cfg);
        t.config.emplace_back("path", path_name(path));
        t.columns = {"species", "kappa_b", "omega_b", "sign_flip", "matching_residual",
                     "path"};
        for (Species sp : {Species::Electron, Species::Positron})
            for (const auto& [bs, res] : states_for(cfg, sp, path, arr))
                t.add_row({std::string(species_name(bs.species)), bs.kappa_b, bs.omega_b,
                           static_cast<std::int64_t>(bs.sign_flip), res,
                           path_name(path)});
        t.checks.emplace_back("n_states", static_cast<std::int64_t>(t.rows.size()));
        return t;
    }

    if (!cfg.impurities.empty())
        throw std::invalid_argument(
            "sweep mode builds its own single impurity; drop the impurity list");

    const bool elec = cfg.sweep == SweepKind::Electrostatic;
    GridSpec g = cfg.sweep_grid;
    if (g.n == 0) g = elec ? GridSpec{0.0, kTwoPi, 32} : GridSpec{-2.0, 2.0, 33};
    if (g.n < 2) throw std::invalid_argument("sweep grid needs n >= 2");
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || !(g.lo < g.hi))
        throw std::invalid_argument("sweep grid needs finite min < max");

    t.config.emplace_back("sweep", elec ? "q" : "lambda");
    t.config.emplace_back("sweep_grid", grid_echo(g));
    t.columns = {elec ? "q" : "lambda", "species",           "kappa_b", "omega_b",
                 "sign_flip",           "matching_residual", "path"};

    // The electrostatic sweep samples interval midpoints so quadrant
    // boundaries (where no bound state exists) are never hit; the mass-spike
    // sweep includes its endpoints.
    bool electron_iff_negative = true;
    for (int i = 0; i < g.n; ++i) {
        const double c = elec ? g.lo + (g.hi - g.lo) * (i + 0.5) / g.n : grid_point(g, i);
        const std::optional<BoundState> s = elec ? electrostatic_bound_state(cfg.mass, c)
                                                 : mass_spike_bound_state(cfg.mass, c);
        if (!s) continue;
        const PointInteraction pi = elec ? PointInteraction{c, 0.0}
                                         : PointInteraction{0.0, c};
        t.add_row({c, std::string(species_name(s->species)), s->kappa_b, s->omega_b,
                   static_cast<std::int64_t>(s->sign_flip), matching_residual(*s, pi),
                   std::string("analytic")});
        if (!elec && (s->species == Species::Electron) != (c < 0.0))
            electron_iff_negative = false;
    }
    t.checks.emplace_back("n_states", static_cast<std::int64_t>(t.rows.size()));

    if (elec && g.lo == 0.0 && std::abs(g.hi - kTwoPi) < 1e-12) {
        std::string pattern;
        for (int quad = 0; quad < 4; ++quad) {
            std::string found = "none";
            for (const auto& row : t.rows) {
                const double q = std::get<double>(row[0]);
                const double r = reduce_two_pi(q);
                if (static_cast<int>(r / (0.5 * kPi)) != quad) continue;
                const std::string& sp = std::get<std::string>(row[1]);
                if (found == "none")
                    found = sp;
                else if (found != sp)
                    found = "mixed";
            }
            if (quad) pattern += ',';
            pattern += found;
        }
        t.checks.emplace_back("quadrant_species", pattern);
    }
    if (!elec)
        t.checks.emplace_back("electron_iff_negative_lambda",
                              std::string(electron_iff_negative ? "true" : "false"));
    return t;
}

Table run_density(const JobConfig& cfg)
{
    validate_common(cfg);
    const Path path = classify_path(cfg.impurities);
    const ImpurityArray arr = make_array(cfg);

    std::vector<std::pair<BoundState, double>> found =
        states_for(cfg, cfg.species, path, arr);
    if (found.empty())
        throw std::runtime_error(std::string("no bound state for this configuration (species = ") +
                                 species_name(cfg.species) + ")");
    if (cfg.state_index < 0 || cfg.state_index >= static_cast<int>(found.size()))
        throw std::invalid_argument("state_index out of range; this configuration has " +
                                    std::to_string(found.size()) + " bound state(s)");
    const BoundState& bs = found[cfg.state_index].first;
    const double residual = found[cfg.state_index].second;

    GridSpec g = cfg.x_grid;
    if (g.n == 0) {
        const double span = 10.0 / bs.kappa_b;
        g = {-span, span, 2001};
    }
    validate_x_grid(g);

    const int charge_sign = (bs.species == Species::Electron) ? +1 : -1;
    const std::optional<DensityProfile> prof =
        (path == Path::Numeric) ? std::nullopt
                                : std::make_optional(bound_state_density(bs, cfg.Q));
    const auto density = [&](double x) {
        if (prof) return (*prof)(x);
        return charge_sign * cfg.Q * bs.profile.eval(x).norm2();
    };

    Table t;
    echo_common(t, cfg);
    t.config.emplace_back("x_grid", grid_echo(g));
    t.config.emplace_back("state_index", std::to_string(cfg.state_index));
    t.config.emplace_back("path", path_name(path));
    t.columns = {"x", "j0"};

    const std::vector<double> xs = x_points(g);
    std::vector<double> j0(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        j0[i] = density(xs[i]);
        t.add_row({xs[i], j0[i]});
    }

    double trap = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        trap += 0.5 * (j0[i] + j0[i + 1]) * (xs[i + 1] - xs[i]);
    double total = trap;
    if (g.n >= 3 && g.n % 2 == 1) {
        total = 0.0;
        for (int i = 0; i + 2 < g.n; i += 2)
            total += simpson_pair(xs[i + 1] - xs[i], xs[i + 2] - xs[i + 1], j0[i],
                                  j0[i + 1], j0[i + 2]);
    }

    t.checks.emplace_back("kappa_b", bs.kappa_b);
    t.checks.emplace_back("omega_b", bs.omega_b);
    t.checks.emplace_back("charge_sign", static_cast<std::int64_t>(charge_sign));
    t.checks.emplace_back("j0_at_zero", density(0.0));
    t.checks.emplace_back("decay_rate", 2.0 * bs.kappa_b);
    t.checks.emplace_back("matching_residual", residual);
    t.checks.emplace_back("total_charge", total);
    t.checks.emplace_back("total_charge_trapezoid", trap);
    t.checks.emplace_back("expected_total_charge", charge_sign * cfg.Q);
    return t;
}

Table run_phase(const JobConfig& cfg)
{
    validate_common(cfg);
    validate_k_grid(cfg.k_grid);
    const Path path = classify_path(cfg.impurities);
    if (path == Path::Numeric)
        throw std::invalid_argument(
            "phase shifts need a single pure electrostatic or mass-spike impurity at the "
            "origin");
    const bool elec = path == Path::AnalyticElectrostatic;
    const PointInteraction& pi = cfg.impurities.front().coupling;
    const double coupling = elec ? pi.q : pi.lambda;
    const PointKind kind = elec ? PointKind::Electrostatic : PointKind::MassSpike;

    Table t;
    echo_common(t, cfg);
    t.config.emplace_back("k_grid", grid_echo(cfg.k_grid));
    t.config.emplace_back("kind", elec ? "electrostatic" : "mass_spike");
    t.columns = {"k",
                 "delta_plus",
                 "delta_minus",
                 "delta",
                 "delta_unwrapped",
                 "tan_two_delta",
                 "closed_form_tan_two_delta",
                 "residual"};

    double worst_guarded = 0.0;
    double prev = 0.0;
    bool first = true;
    for (int i = 0; i < cfg.k_grid.n; ++i) {
        const double k = grid_point(cfg.k_grid, i);
        const ScatteringResult amp =
            elec ? electrostatic_amplitudes(cfg.mass, coupling, k, cfg.species)
                 : mass_spike_amplitudes(cfg.mass, coupling, k, cfg.species);
        const PhaseShifts ps = total_phase_shift(amp);
        const double closed =
            closed_form_tan_two_delta(cfg.mass, coupling, kind, cfg.species, k);

        // The branch-free comparison: fold both angles mod pi and difference.
        const double residual = std::abs(std::remainder(2.0 * ps.delta - std::atan(closed), kPi));

        double unwrapped = ps.delta;
        if (!first) unwrapped += kPi * std::round((prev - ps.delta) / kPi);
        prev = unwrapped;
        first = false;

        const cplx s2r2 = amp.sigma * amp.sigma - amp.rho * amp.rho;
        if (std::abs(s2r2.real()) > 1e-8) worst_guarded = std::max(worst_guarded, residual);

        t.add_row({k, ps.delta_plus, ps.delta_minus, ps.delta, unwrapped,
                   ps.tan_two_delta, closed, residual});
    }
    t.checks.emplace_back("max_residual_guarded", worst_guarded);
    t.checks.emplace_back("n_rows", static_cast<std::int64_t>(t.rows.size()));
    return t;
}

}  // namespace dirac1d
