#pragma once

#include <array>
#include <vector>

#include "trispin/dynamics.hpp"

// Wootters concurrence of two-qubit states and concurrence time series.

namespace trispin {

struct ConcurrenceSeries {
    std::vector<double> times;  // strictly increasing
    std::vector<double> c12;
    std::vector<double> c23;
    std::vector<double> c13;
};

// rho_tilde = (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
Mat spin_flip(const Mat& rho);

// C = max(0, l1 - l2 - l3 - l4) with l_i the descending non-negative square
// roots of the eigenvalues of rho * spin_flip(rho). The l_i are evaluated as
// the singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)), which carries
// the same spectrum but keeps the near-zero l_i at absolute round-off
// accuracy instead of sqrt-amplified accuracy.
double concurrence(const Mat& rho);

// The max{0, ...} reduction alone; sorts its input descending first.
double concurrence_from_lambdas(std::array<double, 4> lambdas);

// Evolves `initial` on a uniform grid of `steps` points spanning [0, t_max]
// and computes the concurrence of each atom pair at every grid time. One
// eigendecomposition is shared by all grid points.
ConcurrenceSeries concurrence_series(const SpinState& initial, const HamiltonianSpec& spec,
                                     double t_max, int steps);

}  // namespace trispin
