#include "trispin/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace trispin {

namespace {

constexpr double kHermTol = 1e-12;

double hermiticity_defect(const Mat& a) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

}  // namespace

AtomPair parse_pair(const std::string& label) {
    if (label == "12") return AtomPair::a12;
    if (label == "23") return AtomPair::a23;
    if (label == "13") return AtomPair::a13;
    throw BadPair("unknown atom pair '" + label + "' (expected 12, 23 or 13)");
}

std::string pair_label(AtomPair pair) {
    switch (pair) {
        case AtomPair::a12: return "12";
        case AtomPair::a23: return "23";
        case AtomPair::a13: return "13";
    }
    throw BadPair("invalid atom pair value");
}

Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat pauli_y() {
    Mat m(2, 2);
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}

Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

HermitianEigen hermitian_eigen(const Mat& a) {
    if (a.rows() != a.cols()) throw NotSquare("hermitian_eigen: matrix is not square");
    if (hermiticity_defect(a) >= kHermTol)
        throw NotHermitian("hermitian_eigen: matrix is not Hermitian within 1e-12");

    Eigen::SelfAdjointEigenSolver<Mat> solver(a);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("hermitian_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Mat unitary_exp(const Mat& h, double t) {
    const HermitianEigen eig = hermitian_eigen(h);
    Vec phases(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        phases(k) = std::exp(cplx(0.0, -eig.values(k) * t));
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Mat partial_trace(const Mat& rho, AtomPair kept) {
    if (rho.rows() != 8 || rho.cols() != 8)
        throw BadDimension("partial_trace: expected an 8x8 matrix");

    // Bit weights of the two kept atoms (high, low) and of the traced atom
    // in the basis index b = 4*b1 + 2*b2 + b3.
    int w_hi = 0, w_lo = 0, w_tr = 0;
    switch (kept) {
        case AtomPair::a12: w_hi = 4; w_lo = 2; w_tr = 1; break;
        case AtomPair::a23: w_hi = 2; w_lo = 1; w_tr = 4; break;
        case AtomPair::a13: w_hi = 4; w_lo = 1; w_tr = 2; break;
    }

    Mat out = Mat::Zero(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 2; ++k)
                out(r, c) += rho((r >> 1) * w_hi + (r & 1) * w_lo + k * w_tr,
                                 (c >> 1) * w_hi + (c & 1) * w_lo + k * w_tr);
    return out;
}

Mat sqrt_psd(const Mat& a) {
    const HermitianEigen eig = hermitian_eigen(a);
    Eigen::VectorXd roots(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        roots(k) = eig.values(k) > 0.0 ? std::sqrt(eig.values(k)) : 0.0;
    return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

std::array<double, 4> general_eigenvalues_product(const Mat& rho, const Mat& rho_tilde) {
    if (rho.rows() != 4 || rho.cols() != 4 || rho_tilde.rows() != 4 || rho_tilde.cols() != 4)
        throw BadDimension("general_eigenvalues_product: expected 4x4 matrices");

    // sqrt(rho) * rho_tilde * sqrt(rho) is Hermitian PSD with the same
    // spectrum as rho * rho_tilde.
    const Mat root = sqrt_psd(rho);
    Mat prod = root * rho_tilde * root;
    prod = 0.5 * (prod + prod.adjoint().eval());

    Eigen::SelfAdjointEigenSolver<Mat> solver(prod);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("general_eigenvalues_product: eigensolver did not converge");

    std::array<double, 4> out{};
    for (int k = 0; k < 4; ++k) {
        double v = solver.eigenvalues()(3 - k);  // descending
        out[static_cast<std::size_t>(k)] = v > 0.0 ? v : 0.0;
    }
    return out;
}

}  // namespace trispin
