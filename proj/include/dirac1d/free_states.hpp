// Free solutions of the 1D Dirac equation and of its conjugate (positron)
// problem. Energies always sit on the positive branch omega = +sqrt(k^2 + m^2);
// bound-state kinematics enter through k = i*kappa with kappa in (0, m).
//
// Spinor conventions:
//   u+(k) = (1, k/(omega+m))          electron, wave e^{ikx}
//   v+(k) = gamma^2 conj(u+(k))       positron, wave e^{ikx}
//   u-(k) = (k/(-omega-m), 1)         negative branch, kept as a test fixture

#pragma once

#include <cmath>
#include <complex>

#include "dirac1d/mat2.hpp"
#include "dirac1d/point_interaction.hpp"

namespace dirac1d {

struct Kinematics {
    double m = 1.0;
    cplx k{};
    cplx omega{};
};

inline cplx dispersion(double m, cplx k)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::domain_error("dispersion: mass must be positive and finite");
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag()))
        throw std::domain_error("dispersion: non-finite momentum");
    return std::sqrt(k * k + cplx(m * m));
}

inline Kinematics kinematics(double m, cplx k) { return {m, k, dispersion(m, k)}; }

inline Spinor u_plus(double m, cplx k)
{
    const cplx w = dispersion(m, k);
    return {cplx(1.0), k / (w + m)};
}

inline Spinor u_minus(double m, cplx k)
{
    const cplx w = -dispersion(m, k);
    return {k / (w - m), cplx(1.0)};
}

inline Spinor v_plus(double m, cplx k)
{
    const Spinor u = u_plus(m, k);
    return gamma(2) * Spinor{std::conj(u.up), std::conj(u.dn)};
}

// Dirac pairing <x|gamma^0|y>; u+ and v+ are orthogonal under it for any k.
inline cplx dirac_inner(const Spinor& x, const Spinor& y)
{
    return dot(x, gamma(0) * y);
}

}  // namespace dirac1d
