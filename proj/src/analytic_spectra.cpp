#include "dirac1d/analytic_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dirac1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_mass(double m)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::domain_error("mass must be positive and finite");
}

void require_scattering_k(double k)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("scattering momentum must be positive and finite");
}

void require_finite(double x, const char* what)
{
    if (!std::isfinite(x)) throw std::domain_error(std::string(what) + " must be finite");
}

// Builds the normalized two-zone profile from the canonical decaying
// directions: electron (1, -+i t), positron (-+i t, 1), t = kappa/(omega+m),
// zone I carrying e^{+kappa x} and zone II carrying sign_flip * e^{-kappa x}.
BoundState two_zone_state(Species sp, double m, double kappa, double omega, int sign_flip)
{
    const double t = kappa / (omega + m);
    const double amp = std::sqrt(kappa) / std::sqrt(1.0 + t * t);
    const cplx it(0.0, t);

    Spinor zone1, zone2;
    if (sp == Species::Electron) {
        zone1 = {cplx(1.0), -it};
        zone2 = {cplx(1.0), +it};
    } else {
        zone1 = {-it, cplx(1.0)};
        zone2 = {+it, cplx(1.0)};
    }

    BoundState bs;
    bs.species = sp;
    bs.kappa_b = kappa;
    bs.omega_b = omega;
    bs.sign_flip = sign_flip;
    bs.profile.pieces = {
        {-kInf, 0.0, cplx(amp) * zone1, +kappa},
        {0.0, kInf, cplx(sign_flip * amp) * zone2, -kappa},
    };
    return bs;
}

}  // namespace

Spinor SpinorField::eval(double x) const
{
    Spinor s{};
    for (const auto& p : pieces)
        if (x >= p.x_lo && x < p.x_hi) s = s + cplx(std::exp(p.exponent * x)) * p.coeff;
    return s;
}

Spinor SpinorField::left_limit(double x) const
{
    Spinor s{};
    for (const auto& p : pieces)
        if (x > p.x_lo && x <= p.x_hi) s = s + cplx(std::exp(p.exponent * x)) * p.coeff;
    return s;
}

double SpinorField::total_probability() const
{
    double total = 0.0;
    for (const auto& a : pieces) {
        for (const auto& b : pieces) {
            const double lo = std::max(a.x_lo, b.x_lo);
            const double hi = std::min(a.x_hi, b.x_hi);
            if (!(lo < hi)) continue;
            const double s = a.exponent + b.exponent;
            double integral;
            if (s == 0.0) {
                integral = hi - lo;
            } else {
                const double top = std::isinf(hi) ? (s < 0.0 ? 0.0 : kInf) : std::exp(s * hi);
                const double bot = std::isinf(lo) ? (s > 0.0 ? 0.0 : kInf) : std::exp(s * lo);
                integral = (top - bot) / s;
            }
            if (!std::isfinite(integral))
                throw std::domain_error("SpinorField: divergent probability integral");
            total += (dot(a.coeff, b.coeff) * integral).real();
        }
    }
    return total;
}

void SpinorField::scale(double s)
{
    for (auto& p : pieces) p.coeff = cplx(s) * p.coeff;
}

std::optional<BoundState> electrostatic_bound_state(double m, double q)
{
    require_mass(m);
    require_finite(q, "coupling q");
    const double r = reduce_two_pi(q);
    switch (classify(q)) {
        case QRegion::AtZero:
        case QRegion::AtPi: return std::nullopt;
        case QRegion::First:
            return two_zone_state(Species::Positron, m, m * std::sin(r), m * std::cos(r), +1);
        case QRegion::AtHalfPi: return two_zone_state(Species::Positron, m, m, 0.0, +1);
        case QRegion::Second:
            return two_zone_state(Species::Electron, m, m * std::sin(r), -m * std::cos(r), -1);
        case QRegion::Third:
            return two_zone_state(Species::Positron, m, -m * std::sin(r), -m * std::cos(r), -1);
        case QRegion::AtThreeHalfPi: return two_zone_state(Species::Electron, m, m, 0.0, +1);
        case QRegion::Fourth:
            return two_zone_state(Species::Electron, m, -m * std::sin(r), m * std::cos(r), +1);
    }
    throw std::logic_error("electrostatic_bound_state: unreachable");
}

std::optional<BoundState> mass_spike_bound_state(double m, double lambda)
{
    require_mass(m);
    require_finite(lambda, "coupling lambda");
    if (lambda == 0.0) return std::nullopt;
    const double kappa = m * std::abs(std::tanh(lambda));
    const double omega = m / std::cosh(lambda);
    const Species sp = (lambda < 0.0) ? Species::Electron : Species::Positron;
    return two_zone_state(sp, m, kappa, omega, +1);
}

ScatteringResult electrostatic_amplitudes(double m, double q, double k, Species s)
{
    require_mass(m);
    require_scattering_k(k);
    require_finite(q, "coupling q");
    const double w = std::sqrt(k * k + m * m);
    const double sgn = (s == Species::Electron) ? 1.0 : -1.0;
    const cplx den(k * std::cos(q), sgn * w * std::sin(q));
    return {k / den, cplx(0.0, -sgn * m * std::sin(q)) / den};
}

ScatteringResult mass_spike_amplitudes(double m, double lambda, double k, Species s)
{
    require_mass(m);
    require_scattering_k(k);
    require_finite(lambda, "coupling lambda");
    const double w = std::sqrt(k * k + m * m);
    const double sgn = (s == Species::Electron) ? 1.0 : -1.0;
    const cplx den(k * std::cosh(lambda), sgn * m * std::sinh(lambda));
    return {k / den, cplx(0.0, -sgn * w * std::sinh(lambda)) / den};
}

PhaseShifts total_phase_shift(const ScatteringResult& r)
{
    if (r.unitarity_residual() > 1e-8)
        throw std::domain_error("total_phase_shift: amplitudes violate unitarity");
    const cplx ep = r.sigma + r.rho;
    const cplx em = r.sigma - r.rho;
    PhaseShifts p;
    p.delta_plus = 0.5 * std::atan2(ep.imag(), ep.real());
    p.delta_minus = 0.5 * std::atan2(em.imag(), em.real());
    p.delta = p.delta_plus + p.delta_minus;
    p.tan_two_delta = std::tan(2.0 * p.delta);
    return p;
}

double closed_form_tan_two_delta(double m, double coupling, PointKind kind, Species s,
                                 double k)
{
    require_mass(m);
    require_scattering_k(k);
    require_finite(coupling, "coupling");
    const double sgn = (s == Species::Electron) ? 1.0 : -1.0;
    if (kind == PointKind::Electrostatic) {
        const double w = std::sqrt(k * k + m * m);
        return sgn * 2.0 * k * w * std::sin(2.0 * coupling) /
               (m * m - (2.0 * k * k + m * m) * std::cos(2.0 * coupling));
    }
    return -sgn * 2.0 * k * m * std::sinh(2.0 * coupling) /
           (k * k + m * m + (k * k - m * m) * std::cosh(2.0 * coupling));
}

double pole_condition_residual(double m, double coupling, PointKind kind, Species s,
                               double kappa)
{
    require_mass(m);
    require_finite(coupling, "coupling");
    if (!(kappa > 0.0) || !(kappa < m))
        throw std::domain_error("pole_condition_residual: kappa must lie in (0, m)");
    const double sgn = (s == Species::Electron) ? 1.0 : -1.0;
    if (kind == PointKind::Electrostatic) {
        const double w = std::sqrt(m * m - kappa * kappa);
        return std::abs(kappa * std::cos(coupling) + sgn * w * std::sin(coupling));
    }
    return std::abs(kappa * std::cosh(coupling) + sgn * m * std::sinh(coupling));
}

DensityProfile bound_state_density(const BoundState& bs, double Q)
{
    if (!(Q > 0.0) || !std::isfinite(Q))
        throw std::domain_error("bound_state_density: Q must be positive and finite");
    const int sign = (bs.species == Species::Electron) ? +1 : -1;
    return {Q, sign, Q * bs.kappa_b, 2.0 * bs.kappa_b};
}

double matching_residual(const BoundState& bs, const PointInteraction& p)
{
    const Mat2C t = matching_matrix(p, bs.species);
    const Spinor got = bs.profile.eval(0.0);
    const Spinor want = t * bs.profile.left_limit(0.0);
    return std::max(std::abs(got.up - want.up), std::abs(got.dn - want.dn));
}

}  // namespace dirac1d
