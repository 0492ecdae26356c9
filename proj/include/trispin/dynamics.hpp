#pragma once

#include <string>

#include "trispin/cavity.hpp"
#include "trispin/linalg.hpp"

// Three-qubit Hamiltonian construction and unitary evolution.

namespace trispin {

struct HamiltonianSpec {
    CouplingSet couplings;
};

// Pure state of the three atoms. amplitudes[b] with b = 4*b1 + 2*b2 + b3 and
// b_i = 0 for ground. sigma_z convention: |g> -> -1, |e> -> +1.
struct SpinState {
    Vec amplitudes;
};

// Builds |psi> from a basis label like "ggg" or "geg".
SpinState make_basis_state(const std::string& labels);

// H = J12 s1z s2z + J23 s2z s3z + J31 s3z s1z + Gamma (s1x + s2x + s3x),
// an 8x8 real symmetric matrix.
Mat build_hamiltonian(const HamiltonianSpec& spec);

// |psi(t)> = exp(-iHt)|psi(0)> through the spectral decomposition.
SpinState evolve(const SpinState& state, const HamiltonianSpec& spec, double t);

// Independent verification path: integrates i d|psi>/dt = H|psi> with
// classical RK4 and no renormalization (norm drift is a diagnostic).
// Throws StepTooLarge when ||H||_inf * dt >= 0.1.
SpinState evolve_rk4_oracle(const SpinState& state, const HamiltonianSpec& spec, double t,
                            double dt);

// rho_pair = Tr_excluded |psi><psi|, a 4x4 Hermitian trace-1 PSD matrix.
Mat reduced_density(const SpinState& state, AtomPair pair);

}  // namespace trispin
