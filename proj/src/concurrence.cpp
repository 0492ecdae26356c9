#include "trispin/concurrence.hpp"

#include <algorithm>
#include <cmath>

namespace trispin {

namespace {

void require_4x4(const Mat& rho, const char* who) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw BadDimension(std::string(who) + ": expected a 4x4 matrix");
}

const Mat& spin_flip_kernel() {
    static const Mat yy = kron(pauli_y(), pauli_y());
    return yy;
}

}  // namespace

Mat spin_flip(const Mat& rho) {
    require_4x4(rho, "spin_flip");
    const Mat& yy = spin_flip_kernel();
    return yy * rho.conjugate() * yy;
}

double concurrence_from_lambdas(std::array<double, 4> lambdas) {
    std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
    double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    if (c < 0.0) return 0.0;
    if (c > 1.0 && c < 1.0 + 1e-9) return 1.0;  // round-off just above the top
    return c;
}

double concurrence(const Mat& rho) {
    require_4x4(rho, "concurrence");
    double defect = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            defect = std::max(defect, std::abs(rho(i, j) - std::conj(rho(j, i))));
    if (defect >= 1e-8) throw NotHermitian("concurrence: input is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-6 || std::abs(rho.trace().imag()) > 1e-6)
        throw ValidationError({"concurrence input must have unit trace"});

    const Mat sym = 0.5 * (rho + rho.adjoint().eval());
    const Mat root = sqrt_psd(sym);

    // The Wootters lambdas are the singular values of
    //   B = sqrt(rho) (sy x sy) conj(sqrt(rho)),
    // since B B^dagger = sqrt(rho) rho_tilde sqrt(rho).
    const Mat b = root * spin_flip_kernel() * root.conjugate();
    Eigen::JacobiSVD<Mat> svd(b);
    const auto& sv = svd.singularValues();
    return concurrence_from_lambdas({sv(0), sv(1), sv(2), sv(3)});
}

ConcurrenceSeries concurrence_series(const SpinState& initial, const HamiltonianSpec& spec,
                                     double t_max, int steps) {
    if (steps < 2) throw ValidationError({"time grid needs steps >= 2"});
    if (!(t_max > 0.0)) throw ValidationError({"time grid needs t_max > 0"});

    const Mat h = build_hamiltonian(spec);
    const HermitianEigen eig = hermitian_eigen(h);
    const Vec projected = eig.vectors.adjoint() * initial.amplitudes;

    ConcurrenceSeries out;
    out.times.resize(static_cast<std::size_t>(steps));
    out.c12.resize(out.times.size());
    out.c23.resize(out.times.size());
    out.c13.resize(out.times.size());

    for (int k = 0; k < steps; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(steps - 1);
        Vec phased(projected.size());
        for (Eigen::Index j = 0; j < projected.size(); ++j)
            phased(j) = std::exp(cplx(0.0, -eig.values(j) * t)) * projected(j);
        const SpinState psi{eig.vectors * phased};

        const auto idx = static_cast<std::size_t>(k);
        out.times[idx] = t;
        out.c12[idx] = concurrence(reduced_density(psi, AtomPair::a12));
        out.c23[idx] = concurrence(reduced_density(psi, AtomPair::a23));
        out.c13[idx] = concurrence(reduced_density(psi, AtomPair::a13));
    }
    return out;
}

}  // namespace trispin
