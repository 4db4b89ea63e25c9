#include "dirac1d/transfer_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dirac1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_mass(double m)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::domain_error("mass must be positive and finite");
}

bool finite(const Mat2C& m)
{
    for (const auto& z : m.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

struct BasisSpinors {
    Spinor inc;  // carries e^{+ikx}
    Spinor ref;  // carries e^{-ikx}
};

// The positron columns use the holomorphic partner (c, 1), -gamma^0 (c, 1),
// which agrees with v+(k) on the real axis and continues to k = i*kappa
// without conjugation.
BasisSpinors basis_spinors(Species sp, double m, cplx k)
{
    const cplx w = dispersion(m, k);
    const cplx c = k / (w + m);
    if (sp == Species::Electron) return {{cplx(1.0), c}, {cplx(1.0), -c}};
    return {{c, cplx(1.0)}, {-c, cplx(1.0)}};
}

BoundState reconstruct(const ImpurityArray& arr, Species sp, double m, double kappa)
{
    const cplx k(0.0, kappa);
    const auto [inc, ref] = basis_spinors(sp, m, k);
    const std::size_t n = arr.size();

    std::vector<std::array<cplx, 2>> coef(n + 1);
    coef[0] = {cplx(0.0), cplx(1.0)};  // pure growing mode on the far left
    for (std::size_t j = 0; j < n; ++j) {
        const Mat2C mj = coefficient_transfer(arr.sites[j], sp, m, k);
        coef[j + 1] = {mj(0, 0) * coef[j][0] + mj(0, 1) * coef[j][1],
                       mj(1, 0) * coef[j][0] + mj(1, 1) * coef[j][1]};
    }

    BoundState bs;
    bs.species = sp;
    bs.kappa_b = kappa;
    bs.omega_b = std::sqrt(std::max(0.0, m * m - kappa * kappa));
    bs.sign_flip = (coef[n][0].real() >= 0.0) ? +1 : -1;
    coef[n][1] = cplx(0.0);  // residual of the secular root; decay is exact

    for (std::size_t j = 0; j <= n; ++j) {
        const double xlo = (j == 0) ? -kInf : arr.sites[j - 1].position;
        const double xhi = (j == n) ? +kInf : arr.sites[j].position;
        if (std::abs(coef[j][0]) > 0.0)
            bs.profile.pieces.push_back({xlo, xhi, coef[j][0] * inc, -kappa});
        if (std::abs(coef[j][1]) > 0.0)
            bs.profile.pieces.push_back({xlo, xhi, coef[j][1] * ref, +kappa});
    }

    const double p = bs.profile.total_probability();
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::runtime_error("find_bound_states: profile normalization failed");
    bs.profile.scale(1.0 / std::sqrt(p));
    return bs;
}

}  // namespace

ImpurityArray::ImpurityArray(std::vector<Impurity> s) : sites(std::move(s))
{
    if (sites.empty()) throw std::domain_error("ImpurityArray: need at least one site");
    for (const auto& imp : sites) {
        if (!std::isfinite(imp.position) || !std::isfinite(imp.coupling.q) ||
            !std::isfinite(imp.coupling.lambda))
            throw std::domain_error("ImpurityArray: positions and couplings must be finite");
    }
    std::sort(sites.begin(), sites.end(),
              [](const Impurity& a, const Impurity& b) { return a.position < b.position; });
    for (std::size_t i = 1; i < sites.size(); ++i)
        if (sites[i].position == sites[i - 1].position)
            throw std::domain_error("ImpurityArray: duplicate site positions");
}

Mat2C wave_basis(double x, Species sp, double m, cplx k)
{
    const auto [inc, ref] = basis_spinors(sp, m, k);
    const cplx ph = std::exp(cplx(0.0, 1.0) * k * x);
    Mat2C w;
    w(0, 0) = inc.up * ph;
    w(1, 0) = inc.dn * ph;
    w(0, 1) = ref.up / ph;
    w(1, 1) = ref.dn / ph;
    return w;
}

Mat2C coefficient_transfer(const Impurity& imp, Species sp, double m, cplx k)
{
    const Mat2C w0 = wave_basis(0.0, sp, m, k);
    if (std::abs(w0.det()) < 1e-14)
        throw std::domain_error("coefficient_transfer: wave basis degenerates (k too close to 0)");

    const Mat2C t = matching_matrix(imp.coupling, sp);
    Mat2C mm = w0.inverse() * (t * w0);

    // Conjugating by diag(e^{ikx0}, e^{-ikx0}) moves the impurity from the
    // origin to x0; only the off-diagonal entries pick up phases.
    const cplx ph = std::exp(cplx(0.0, 2.0) * k * imp.position);
    mm(0, 1) /= ph;
    mm(1, 0) *= ph;

    if (!finite(mm))
        throw std::overflow_error("coefficient_transfer: site too far out for this momentum");
    return mm;
}

Mat2C compose(const ImpurityArray& arr, Species sp, double m, cplx k)
{
    if (arr.sites.empty()) throw std::domain_error("compose: empty impurity array");
    Mat2C total = Mat2C::identity();
    for (const auto& imp : arr.sites) total = coefficient_transfer(imp, sp, m, k) * total;
    return total;
}

TwoSided s_matrix(const ImpurityArray& arr, Species sp, double m, double k)
{
    require_mass(m);
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("s_matrix: momentum must be positive and finite");

    const Mat2C mt = compose(arr, sp, m, cplx(k));
    const cplx m22 = mt(1, 1);
    if (std::abs(m22) < 1e-14)
        throw std::domain_error("s_matrix: transfer matrix has no transmitting channel");

    return {mt.det() / m22, -mt(1, 0) / m22, cplx(1.0) / m22, mt(0, 1) / m22};
}

double secular_function(const ImpurityArray& arr, Species sp, double m, double kappa)
{
    require_mass(m);
    if (!(kappa > 0.0) || !(kappa < m))
        throw std::domain_error("secular_function: kappa must lie in (0, m)");
    const Mat2C mt = compose(arr, sp, m, cplx(0.0, kappa));
    return mt(1, 1).real();
}

std::vector<BoundState> find_bound_states(const ImpurityArray& arr, Species sp, double m,
                                          int n_grid, double margin)
{
    require_mass(m);
    if (n_grid < 2) throw std::invalid_argument("find_bound_states: n_grid must be >= 2");
    if (!(margin > 0.0) || !(margin < 0.5))
        throw std::invalid_argument("find_bound_states: margin must lie in (0, 0.5)");
    const double lo = margin * m;
    const double hi = (1.0 - margin) * m;

    std::vector<double> roots;
    double prev_k = lo;
    double prev_f = secular_function(arr, sp, m, lo);
    if (prev_f == 0.0) roots.push_back(lo);

    for (int i = 1; i < n_grid; ++i) {
        const double kap = lo + (hi - lo) * static_cast<double>(i) / (n_grid - 1);
        const double f = secular_function(arr, sp, m, kap);
        if (f == 0.0) {
            roots.push_back(kap);
        } else if (prev_f != 0.0 && std::signbit(f) != std::signbit(prev_f)) {
            double a = prev_k;
            double b = kap;
            double fa = prev_f;
            for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                const double fm = secular_function(arr, sp, m, mid);
                if (fm == 0.0) {
                    a = mid;
                    b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_k = kap;
        prev_f = f;
    }

    std::vector<BoundState> out;
    out.reserve(roots.size());
    for (double kap : roots) out.push_back(reconstruct(arr, sp, m, kap));
    std::sort(out.begin(), out.end(),
              [](const BoundState& x, const BoundState& y) { return x.kappa_b < y.kappa_b; });
    return out;
}

double matching_residual(const BoundState& bs, const ImpurityArray& arr)
{
    double worst = 0.0;
    for (const auto& imp : arr.sites) {
        const Mat2C t = matching_matrix(imp.coupling, bs.species);
        const Spinor got = bs.profile.eval(imp.position);
        const Spinor want = t * bs.profile.left_limit(imp.position);
        worst = std::max(worst, std::abs(got.up - want.up));
        worst = std::max(worst, std::abs(got.dn - want.dn));
    }
    return worst;
}

}  // namespace dirac1d
