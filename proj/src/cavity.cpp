#include "trispin/cavity.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

namespace trispin {

namespace {

constexpr double kDegenerateTol = 1e-12;

cplx phase(double phi) { return std::exp(cplx(0.0, phi)); }

// Drift matrix and drive of the mean-field system dX/dt = A X + b,
// X = (alpha, beta, gamma_c).
void meanfield_system(const CavityParams& p, Eigen::Matrix3cd& a, Eigen::Vector3cd& b) {
    const cplx m = response_rate(p);
    const double g0 = p.gamma0;
    a << -m, g0 * phase(p.phi12), 0.0,
         g0 * phase(p.phi21), -m, g0 * phase(p.phi23),
         0.0, g0 * phase(p.phi32), -m;
    b << p.lambda_drive, 0.0, 0.0;
}

}  // namespace

cplx response_rate(const CavityParams& p) { return cplx(p.gamma0, p.delta); }

cplx fiber_loop_factor(const CavityParams& p) {
    const double g0sq = p.gamma0 * p.gamma0;
    return g0sq * (0.25 + phase(p.phi21 + p.phi12) + phase(p.phi32 + p.phi23));
}

void validate(const CavityParams& p) {
    std::vector<std::string> issues;
    auto finite = [](double x) { return std::isfinite(x); };
    if (!(finite(p.gamma0) && p.gamma0 > 0.0)) issues.push_back("gamma0 must be finite and > 0");
    if (!(finite(p.nu) && p.nu >= 0.0)) issues.push_back("nu must be finite and >= 0");
    if (!(finite(p.fiber_length) && p.fiber_length >= 0.0))
        issues.push_back("fiber_length must be finite and >= 0");
    for (double phi : {p.phi12, p.phi21, p.phi23, p.phi32})
        if (!finite(phi)) { issues.push_back("fiber phases must be finite"); break; }
    if (!finite(p.chi)) issues.push_back("chi must be finite");
    if (!finite(p.delta)) issues.push_back("delta must be finite");
    if (!finite(p.lambda_drive)) issues.push_back("lambda must be finite");
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

FieldSteadyState steady_state_printed(const CavityParams& p) {
    validate(p);
    const cplx m = response_rate(p);
    const double g0 = p.gamma0;
    const cplx loop12 = phase(p.phi12 + p.phi21);
    const cplx loop23 = phase(p.phi23 + p.phi32);

    const cplx den = m * m * (m + g0) - m * g0 * (loop12 + loop23);
    if (std::abs(den) <= kDegenerateTol)
        throw DegenerateSteadyState("steady_state_printed: denominator magnitude <= 1e-12");

    FieldSteadyState s;
    s.alpha = p.lambda_drive * (m * (m + g0) - g0 * g0 * loop23) / den;
    s.beta = (m * s.alpha - p.lambda_drive) / (g0 * phase(p.phi12));
    s.gamma_c = g0 * phase(p.phi32) * s.beta / m;
    return s;
}

FieldSteadyState steady_state_firstprinciples(const CavityParams& p) {
    validate(p);
    Eigen::Matrix3cd drift;
    Eigen::Vector3cd drive;
    meanfield_system(p, drift, drive);

    // Fixed point of dX/dt = A X + b, i.e. (-A) X = b.
    const Eigen::Matrix3cd sys = -drift;
    if (std::abs(sys.determinant()) <= kDegenerateTol)
        throw SingularSystem("steady_state_firstprinciples: singular fixed-point system");

    const Eigen::Vector3cd x = sys.fullPivLu().solve(drive);
    return {x(0), x(1), x(2)};
}

FieldSteadyState meanfield_integrate(const CavityParams& p, double t_end, double dt) {
    validate(p);
    if (!(dt > 0.0) || p.gamma0 * dt >= 0.1)
        throw StepTooLarge("meanfield_integrate: requires 0 < gamma0*dt < 0.1");

    Eigen::Matrix3cd drift;
    Eigen::Vector3cd drive;
    meanfield_system(p, drift, drive);

    const auto deriv = [&](const Eigen::Vector3cd& x) -> Eigen::Vector3cd {
        return drift * x + drive;
    };

    const long n = std::max(1L, static_cast<long>(std::ceil(t_end / dt)));
    const double h = t_end / static_cast<double>(n);
    Eigen::Vector3cd x = Eigen::Vector3cd::Zero();
    for (long i = 0; i < n; ++i) {
        const Eigen::Vector3cd k1 = deriv(x);
        const Eigen::Vector3cd k2 = deriv(x + 0.5 * h * k1);
        const Eigen::Vector3cd k3 = deriv(x + 0.5 * h * k2);
        const Eigen::Vector3cd k4 = deriv(x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    if (deriv(x).cwiseAbs().maxCoeff() > 1e-6)
        throw NotConverged(
            "meanfield_integrate: final derivative above 1e-6 (fixed point not reached; "
            "it may not be attracting for these parameters)");
    return {x(0), x(1), x(2)};
}

CouplingSet couplings(const CavityParams& p, const FieldSteadyState& s) {
    validate(p);
    const cplx m = response_rate(p);
    const cplx den = m * m - fiber_loop_factor(p);
    if (std::abs(den) <= kDegenerateTol)
        throw DegenerateCoupling("couplings: |M^2 - W^2| <= 1e-12");

    const double g0 = p.gamma0;
    const double pref = g0 * p.chi * p.chi;
    const cplx ab = s.alpha * std::conj(s.beta);

    CouplingSet c;
    c.j12 = pref * (ab * phase(p.phi21) / den).imag();
    c.j23 = pref * (ab * phase(p.phi32) / den).imag();
    c.j31 = pref *
            (g0 * s.gamma_c * std::conj(s.alpha) * (phase(p.phi23) + phase(p.phi12)) / (m * den))
                .imag();
    return c;
}

CouplingSet apply_fiber_loss(const CouplingSet& c, double nu, double length) {
    const double factor = std::exp(-nu * length);
    CouplingSet out = c;
    out.j12 *= factor;
    out.j23 *= factor;
    out.j31 *= factor;
    return out;
}

}  // namespace trispin
