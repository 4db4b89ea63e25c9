// Turns a validated job configuration into a tabular artifact. Each job picks
// the closed-form path when the array is a single pure-type impurity at the
// origin and the numeric transfer path otherwise; a column records which.
//
// All quantities are in natural units with the mass as the scale: momenta and
// energies in units of m, lengths in 1/m.

#pragma once

#include <string>
#include <vector>

#include "dirac1d/table.hpp"
#include "dirac1d/transfer_solver.hpp"

namespace dirac1d {

enum class SweepKind { None, Electrostatic, MassSpike };

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

struct JobConfig {
    double mass = 1.0;
    double Q = 1.0;
    Species species = Species::Electron;
    std::vector<Impurity> impurities;

    GridSpec k_grid{0.01, 10.0, 512};
    GridSpec x_grid{0.0, 0.0, 0};      // n == 0: derived from the bound state
    SweepKind sweep = SweepKind::None;
    GridSpec sweep_grid{0.0, 0.0, 0};  // n == 0: per-kind default
    int state_index = 0;               // which bound state a density job uses
};

// Transmission/reflection over the k-grid, one row per (k, incidence side).
Table run_scatter(const JobConfig& cfg);

// Bound states of the configured array (both species), or a coupling sweep
// reproducing the quadrant structure when cfg.sweep is set.
Table run_bound(const JobConfig& cfg);

// Charge density j0(x) of one bound state over the x-grid.
Table run_density(const JobConfig& cfg);

// Phase shifts over the k-grid; needs a single pure-type impurity at the
// origin (the only case with a closed form to compare against).
Table run_phase(const JobConfig& cfg);

const char* species_name(Species s);

}  // namespace dirac1d
