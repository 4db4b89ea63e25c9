// Closed-form spectra of a single point impurity at the origin: bound states
// (with normalized spinor profiles), transmission/reflection amplitudes, phase
// shifts and bound-state charge densities, for electrons and positrons.
//
// Conventions: omega is always the positive branch; bound-state profiles are
// normalized to unit total probability, so the charge density is
// (+-)Q |psi(x)|^2 with + for electrons and - for positrons.

#pragma once

#include <optional>
#include <vector>

#include "dirac1d/free_states.hpp"
#include "dirac1d/point_interaction.hpp"

namespace dirac1d {

enum class PointKind { Electrostatic, MassSpike };

struct ScatteringResult {
    cplx sigma{};  // transmission amplitude
    cplx rho{};    // reflection amplitude

    double unitarity_residual() const
    {
        return std::abs(std::norm(sigma) + std::norm(rho) - 1.0);
    }
};

// One exponential term (A,B)^T e^{exponent*x} supported on [x_lo, x_hi).
// A field may carry several pieces on the same interval; evaluation sums them.
struct SpinorPiece {
    double x_lo = 0.0;
    double x_hi = 0.0;
    Spinor coeff{};
    double exponent = 0.0;
};

struct SpinorField {
    std::vector<SpinorPiece> pieces;

    Spinor eval(double x) const;        // right-continuous: pieces with x in [lo, hi)
    Spinor left_limit(double x) const;  // pieces with x in (lo, hi]
    double total_probability() const;   // exact piecewise-exponential integral
    void scale(double s);
};

struct BoundState {
    Species species = Species::Electron;
    double kappa_b = 0.0;  // decay momentum, in (0, m]
    double omega_b = 0.0;  // energy, +sqrt(m^2 - kappa_b^2)
    int sign_flip = +1;    // zone-II coefficient relative to zone-I
    SpinorField profile;   // normalized to unit total probability
};

// j0(x) = sign * amplitude * exp(-decay_rate * |x|); integrates to sign * Q.
struct DensityProfile {
    double Q = 1.0;
    int sign = +1;  // +1 electron, -1 positron
    double amplitude = 0.0;
    double decay_rate = 0.0;

    double operator()(double x) const
    {
        return sign * amplitude * std::exp(-decay_rate * std::abs(x));
    }
};

struct PhaseShifts {
    double delta_plus = 0.0;   // from S-matrix eigenvalue sigma + rho
    double delta_minus = 0.0;  // from S-matrix eigenvalue sigma - rho
    double delta = 0.0;        // delta_plus + delta_minus
    double tan_two_delta = 0.0;
};

// Bound state of a single electrostatic impurity at the origin, if any.
// The quadrant of q (mod 2pi) decides species and energy sign; q = 0, pi give
// none, q = pi/2 and 3pi/2 give the zero modes (kappa_b = m, omega_b = 0).
std::optional<BoundState> electrostatic_bound_state(double m, double q);

// Bound state of a single mass-spike impurity: electron for lambda < 0,
// positron for lambda > 0, none at lambda = 0. kappa_b = m|tanh(lambda)|.
std::optional<BoundState> mass_spike_bound_state(double m, double lambda);

// Transmission/reflection for k > 0. Left and right incidence coincide for a
// single impurity at the origin, so one ScatteringResult covers both.
ScatteringResult electrostatic_amplitudes(double m, double q, double k, Species s);
ScatteringResult mass_spike_amplitudes(double m, double lambda, double k, Species s);

// Phase shifts from the S-matrix eigenvalues sigma +- rho = e^{2 i delta_+-}.
// Throws if |sigma|^2 + |rho|^2 deviates from 1 by more than 1e-8.
PhaseShifts total_phase_shift(const ScatteringResult& r);

// Closed-form tan(2 delta) for a single pure-type impurity. May return +-inf
// at the poles of the tangent.
double closed_form_tan_two_delta(double m, double coupling, PointKind kind,
                                 Species s, double k);

// |denominator of the transmission amplitude| continued to k = i*kappa;
// vanishes exactly at the bound-state kappa_b.
double pole_condition_residual(double m, double coupling, PointKind kind,
                               Species s, double kappa);

DensityProfile bound_state_density(const BoundState& bs, double Q);

// Max matching defect |psi(0+) - T psi(0-)| of a bound-state profile across a
// single impurity at the origin.
double matching_residual(const BoundState& bs, const PointInteraction& p);

}  // namespace dirac1d
