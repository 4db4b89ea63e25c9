// 2x2 complex matrices, the fixed gamma representation and the closed-form
// matrix exponential used everywhere else in the library.
//
// Representation (1+1 dimensions):
//   gamma^0 = sigma_3,  gamma^1 = i*sigma_2,  gamma^2 = gamma^0 gamma^1 = sigma_1
// with metric eta = diag(+1,-1).

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace dirac1d {

using cplx = std::complex<double>;

struct Mat2C {
    // row-major: a[0]=m11 a[1]=m12 a[2]=m21 a[3]=m22
    std::array<cplx, 4> a{};

    static Mat2C identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
    static Mat2C zero() { return {}; }

    cplx& operator()(int r, int c) { return a[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return a[2 * r + c]; }

    cplx trace() const { return a[0] + a[3]; }
    cplx det() const { return a[0] * a[3] - a[1] * a[2]; }

    Mat2C transpose() const { return {{a[0], a[2], a[1], a[3]}}; }
    Mat2C conjugate() const
    {
        return {{std::conj(a[0]), std::conj(a[1]), std::conj(a[2]), std::conj(a[3])}};
    }
    Mat2C adjoint() const { return conjugate().transpose(); }

    Mat2C inverse() const
    {
        const cplx d = det();
        if (std::abs(d) == 0.0)
            throw std::domain_error("Mat2C::inverse: singular matrix");
        return {{a[3] / d, -a[1] / d, -a[2] / d, a[0] / d}};
    }

    double max_abs() const
    {
        double m = 0.0;
        for (const auto& z : a) m = std::max(m, std::abs(z));
        return m;
    }

    friend Mat2C operator+(const Mat2C& x, const Mat2C& y)
    {
        return {{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]}};
    }
    friend Mat2C operator-(const Mat2C& x, const Mat2C& y)
    {
        return {{x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2], x.a[3] - y.a[3]}};
    }
    friend Mat2C operator*(const Mat2C& x, const Mat2C& y)
    {
        return {{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
                 x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
    }
    friend Mat2C operator*(const cplx& s, const Mat2C& x)
    {
        return {{s * x.a[0], s * x.a[1], s * x.a[2], s * x.a[3]}};
    }
    friend Mat2C operator*(const Mat2C& x, const cplx& s) { return s * x; }
};

struct Spinor {
    cplx up{};
    cplx dn{};

    double norm2() const { return std::norm(up) + std::norm(dn); }

    friend Spinor operator+(const Spinor& x, const Spinor& y)
    {
        return {x.up + y.up, x.dn + y.dn};
    }
    friend Spinor operator-(const Spinor& x, const Spinor& y)
    {
        return {x.up - y.up, x.dn - y.dn};
    }
    friend Spinor operator*(const cplx& s, const Spinor& x) { return {s * x.up, s * x.dn}; }
    friend Spinor operator*(const Mat2C& m, const Spinor& x)
    {
        return {m.a[0] * x.up + m.a[1] * x.dn, m.a[2] * x.up + m.a[3] * x.dn};
    }
};

// Hermitian pairing <x|y>.
inline cplx dot(const Spinor& x, const Spinor& y)
{
    return std::conj(x.up) * y.up + std::conj(x.dn) * y.dn;
}

inline Mat2C pauli(int i)
{
    const cplx I(0.0, 1.0);
    switch (i) {
        case 1: return {{cplx(0), cplx(1), cplx(1), cplx(0)}};
        case 2: return {{cplx(0), -I, I, cplx(0)}};
        case 3: return {{cplx(1), cplx(0), cplx(0), cplx(-1)}};
        default: throw std::domain_error("pauli: index must be 1, 2 or 3");
    }
}

inline Mat2C gamma(int mu)
{
    switch (mu) {
        case 0: return pauli(3);
        case 1: return {{cplx(0), cplx(1), cplx(-1), cplx(0)}};  // i*sigma_2
        case 2: return pauli(1);
        default: throw std::domain_error("gamma: index must be 0, 1 or 2");
    }
}

// exp(A) for any 2x2 complex A through the trace/determinant invariants:
//   A = mu*1 + B, mu = tr(A)/2, B traceless, B^2 = s^2 * 1 with s^2 = -det(B),
//   exp(A) = e^mu [cosh(s)*1 + (sinh(s)/s)*B].
// Both cosh(s) and sinh(s)/s are even in s, so the branch of the square root is
// irrelevant. Near s = 0 the quotient switches to its Taylor series.
inline Mat2C mat_exp(const Mat2C& A)
{
    for (const auto& z : A.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::domain_error("mat_exp: non-finite entry");

    const cplx mu = 0.5 * A.trace();
    Mat2C B = A;
    B.a[0] -= mu;
    B.a[3] -= mu;

    const cplx s2 = -B.det();
    const cplx s = std::sqrt(s2);

    cplx ch, shs;
    if (std::abs(s) < 1e-6) {
        ch = 1.0 + s2 * (0.5 + s2 * (1.0 / 24.0 + s2 / 720.0));
        shs = 1.0 + s2 * (1.0 / 6.0 + s2 * (1.0 / 120.0 + s2 / 5040.0));
    } else {
        ch = std::cosh(s);
        shs = std::sinh(s) / s;
    }

    const cplx scale = std::exp(mu);
    Mat2C r = shs * B;
    r.a[0] += ch;
    r.a[3] += ch;
    return scale * r;
}

// Verifies {gamma^mu, gamma^nu} = 2 eta^{mu nu} and, for the two vector
// indices, gamma^mu+ = gamma^0 gamma^mu gamma^0, exactly (entries are 0/+-1,
// no rounding involved).
inline bool clifford_check()
{
    const double eta[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
    for (int mu = 0; mu < 2; ++mu) {
        for (int nu = 0; nu < 2; ++nu) {
            const Mat2C anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            Mat2C want = Mat2C::identity() * cplx(2.0 * eta[mu][nu]);
            if ((anti - want).max_abs() != 0.0) return false;
        }
    }
    for (int mu = 0; mu < 2; ++mu) {
        const Mat2C lhs = gamma(mu).adjoint();
        const Mat2C rhs = gamma(0) * gamma(mu) * gamma(0);
        if ((lhs - rhs).max_abs() != 0.0) return false;
    }
    if ((gamma(0) * gamma(1) - gamma(2)).max_abs() != 0.0) return false;
    // gamma^2 is hermitian and anticommutes with the two vector gammas
    if ((gamma(2).adjoint() - gamma(2)).max_abs() != 0.0) return false;
    for (int mu = 0; mu < 2; ++mu)
        if ((gamma(2) * gamma(mu) + gamma(mu) * gamma(2)).max_abs() != 0.0) return false;
    return true;
}

}  // namespace dirac1d
