#pragma once

#include <optional>
#include <vector>

#include "dirac1d/analytic_spectra.hpp"
#include "dirac1d/free_states.hpp"
#include "dirac1d/mat2.hpp"
#include "dirac1d/point_interaction.hpp"

namespace dirac1d {

struct Impurity {
    double position = 0.0;
    PointInteraction coupling;
};

// Finite collection of point impurities on the line, kept sorted by position.
// Positions must be finite and pairwise distinct; the array is never empty.
struct ImpurityArray {
    std::vector<Impurity> sites;

    ImpurityArray() = default;
    explicit ImpurityArray(std::vector<Impurity> s);

    std::size_t size() const { return sites.size(); }
};

// Solution basis W(x) of the free equation at momentum k (possibly complex).
// Column 1 is the mode with upper exponent e^{ikx} (right-moving for real k,
// right-decaying for k = i kappa), column 2 its reflected partner e^{-ikx}.
Mat2C wave_basis(double x, Species sp, double m, cplx k);

// M = W(x0)^{-1} T W(x0): action of one impurity on the basis coefficients.
Mat2C coefficient_transfer(const Impurity& imp, Species sp, double m, cplx k);

// Ordered product M_N ... M_1 over the sites, leftmost site applied first.
Mat2C compose(const ImpurityArray& arr, Species sp, double m, cplx k);

struct TwoSided {
    cplx sigma_r, rho_r;  // incidence from the left
    cplx sigma_l, rho_l;  // incidence from the right

    ScatteringResult right() const { return {sigma_r, rho_r}; }
    ScatteringResult left() const { return {sigma_l, rho_l}; }
};

// Transmission and reflection amplitudes of the whole array at real k > 0.
TwoSided s_matrix(const ImpurityArray& arr, Species sp, double m, double k);

// Re M_22 at k = i kappa; bound-state momenta are its zeros in (0, m).
double secular_function(const ImpurityArray& arr, Species sp, double m, double kappa);

// All bound states of the array for one species, sorted by kappa_b.
// Roots of the secular function are bracketed on a fixed grid over (0, m)
// and bisected down to machine-level width; each root is turned into a
// normalized piecewise-exponential profile.
std::vector<BoundState> find_bound_states(const ImpurityArray& arr, Species sp, double m,
                                          int n_grid = 2048, double margin = 1e-6);

// Largest jump-condition violation of a reconstructed profile over the sites.
double matching_residual(const BoundState& bs, const ImpurityArray& arr);

}  // namespace dirac1d
