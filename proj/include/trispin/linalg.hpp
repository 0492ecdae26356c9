#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>

#include "trispin/errors.hpp"

// Dense complex linear algebra kernel for the 2/4/8-dimensional problems
// handled by this library. All functions are pure and deterministic.

namespace trispin {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Two-atom subsystem selector; atoms are numbered 1..3 along the chain.
enum class AtomPair { a12, a23, a13 };

// Parses "12", "23", "13" (throws BadPair otherwise).
AtomPair parse_pair(const std::string& label);
std::string pair_label(AtomPair pair);

// 2x2 Pauli blocks in the (ground, excited) basis ordering used throughout:
// basis index 0 = |g>, 1 = |e>.
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

struct HermitianEigen {
    Eigen::VectorXd values;  // ascending
    Mat vectors;             // columns are the matching orthonormal eigenvectors
};

// Kronecker product, dims (ra*rb) x (ca*cb).
Mat kron(const Mat& a, const Mat& b);

// Eigendecomposition of a Hermitian matrix (symmetry tolerance 1e-12).
HermitianEigen hermitian_eigen(const Mat& a);

// U(t) = V diag(exp(-i lambda_k t)) V^dagger for Hermitian h.
Mat unitary_exp(const Mat& h, double t);

// Reduce an 8x8 three-qubit density matrix to the kept pair's 4x4 matrix.
// Basis convention: index b = 4*b1 + 2*b2 + b3 with b_i = 0 for ground; the
// reduced matrix is indexed 2*b_hi + b_lo with (hi, lo) the kept atoms in
// ascending order.
Mat partial_trace(const Mat& rho, AtomPair kept);

// The four eigenvalues of rho * rho_tilde (both 4x4, rho a density matrix and
// rho_tilde its spin flip), as non-negative reals sorted descending. Computed
// through the Hermitian equivalent sqrt(rho) * rho_tilde * sqrt(rho), which
// shares the spectrum.
std::array<double, 4> general_eigenvalues_product(const Mat& rho, const Mat& rho_tilde);

// Spectral square root of a Hermitian PSD matrix; eigenvalues below zero are
// clamped (round-off guard).
Mat sqrt_psd(const Mat& a);

}  // namespace trispin
