#include "trispin/dynamics.hpp"

#include <cmath>

namespace trispin {

namespace {

double norm_inf(const Mat& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

}  // namespace

SpinState make_basis_state(const std::string& labels) {
    if (labels.size() != 3)
        throw ValidationError({"initial state must name exactly three atoms, e.g. \"ggg\""});
    int index = 0;
    for (char ch : labels) {
        if (ch != 'g' && ch != 'e')
            throw ValidationError({"initial state may only contain 'g' or 'e'"});
        index = 2 * index + (ch == 'e' ? 1 : 0);
    }
    SpinState state;
    state.amplitudes = Vec::Zero(8);
    state.amplitudes(index) = 1.0;
    return state;
}

Mat build_hamiltonian(const HamiltonianSpec& spec) {
    const Mat id = Mat::Identity(2, 2);
    const Mat sz = pauli_z();
    const Mat sx = pauli_x();
    const CouplingSet& c = spec.couplings;

    // sigma_z sign convention cancels in the two-site products, so the
    // standard Pauli blocks give exactly the intended matrix.
    Mat h = c.j12 * kron(kron(sz, sz), id);
    h += c.j23 * kron(kron(id, sz), sz);
    h += c.j31 * kron(kron(sz, id), sz);
    h += c.gamma_laser *
         (kron(kron(sx, id), id) + kron(kron(id, sx), id) + kron(kron(id, id), sx));
    return h;
}

SpinState evolve(const SpinState& state, const HamiltonianSpec& spec, double t) {
    const Mat u = unitary_exp(build_hamiltonian(spec), t);
    return {u * state.amplitudes};
}

SpinState evolve_rk4_oracle(const SpinState& state, const HamiltonianSpec& spec, double t,
                            double dt) {
    const Mat h = build_hamiltonian(spec);
    if (!(dt > 0.0) || norm_inf(h) * dt >= 0.1)
        throw StepTooLarge("evolve_rk4_oracle: requires 0 < ||H||_inf * dt < 0.1");
    if (t == 0.0) return state;

    const cplx minus_i(0.0, -1.0);
    const auto deriv = [&](const Vec& psi) -> Vec { return minus_i * (h * psi); };

    const long n = std::max(1L, static_cast<long>(std::ceil(t / dt)));
    const double step = t / static_cast<double>(n);
    Vec psi = state.amplitudes;
    for (long i = 0; i < n; ++i) {
        const Vec k1 = deriv(psi);
        const Vec k2 = deriv(psi + 0.5 * step * k1);
        const Vec k3 = deriv(psi + 0.5 * step * k2);
        const Vec k4 = deriv(psi + step * k3);
        psi += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return {psi};
}

Mat reduced_density(const SpinState& state, AtomPair pair) {
    const Mat rho = state.amplitudes * state.amplitudes.adjoint();
    return partial_trace(rho, pair);
}

}  // namespace trispin
