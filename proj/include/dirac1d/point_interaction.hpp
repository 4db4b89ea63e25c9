// Point impurities for the 1D Dirac Hamiltonian: a delta potential at one point
// is equivalent to the matching condition psi(x0+) = T psi(x0-) with
//   T(q, lambda) = exp(-i gamma^2 (q*1 + lambda*gamma^0)),
// q the electrostatic strength and lambda the mass-spike strength. Positrons see
// the conjugate problem, which flips the sign of q but not of lambda.

#pragma once

#include <cmath>
#include <numbers>

#include "dirac1d/mat2.hpp"

namespace dirac1d {

enum class Species { Electron, Positron };

struct PointInteraction {
    double q = 0.0;       // electrostatic coupling, raw (not reduced mod 2pi)
    double lambda = 0.0;  // mass-spike coupling
};

enum class Discrete { P, T, C };

// Region of the reduced electrostatic coupling in [0, 2pi). The four open
// quadrants carry the bound-state structure; the boundaries are their own
// category (q = 0, pi: no bound state; q = pi/2, 3pi/2: zero modes).
enum class QRegion {
    AtZero,
    First,
    AtHalfPi,
    Second,
    AtPi,
    Third,
    AtThreeHalfPi,
    Fourth,
};

inline double reduce_two_pi(double q)
{
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(q, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

// Boundaries are matched within 1e-12 of the reduced representative; exact
// floating comparison after fmod would be brittle for inputs like 5*pi/2.
inline QRegion classify(double q)
{
    const double pi = std::numbers::pi;
    const double r = reduce_two_pi(q);
    const double tol = 1e-12;
    if (r < tol || r > 2.0 * pi - tol) return QRegion::AtZero;
    if (std::abs(r - 0.5 * pi) < tol) return QRegion::AtHalfPi;
    if (std::abs(r - pi) < tol) return QRegion::AtPi;
    if (std::abs(r - 1.5 * pi) < tol) return QRegion::AtThreeHalfPi;
    if (r < 0.5 * pi) return QRegion::First;
    if (r < pi) return QRegion::Second;
    if (r < 1.5 * pi) return QRegion::Third;
    return QRegion::Fourth;
}

inline Mat2C matching_matrix(const PointInteraction& p, Species s)
{
    if (!std::isfinite(p.q) || !std::isfinite(p.lambda))
        throw std::domain_error("matching_matrix: non-finite coupling");
    const double q = (s == Species::Electron) ? p.q : -p.q;
    const cplx minus_i(0.0, -1.0);
    const Mat2C generator = q * Mat2C::identity() + p.lambda * gamma(0);
    return mat_exp(minus_i * (gamma(2) * generator));
}

inline PointInteraction transform(const PointInteraction& p, Discrete which)
{
    switch (which) {
        case Discrete::P:
        case Discrete::T: return p;
        case Discrete::C: return {-p.q, p.lambda};
    }
    throw std::domain_error("transform: unknown discrete transform");
}

}  // namespace dirac1d
