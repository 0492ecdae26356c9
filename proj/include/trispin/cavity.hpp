#pragma once

#include <complex>

#include "trispin/errors.hpp"

// Maps physical cavity/fiber parameters to steady-state field amplitudes and
// effective Ising couplings. hbar = 1 throughout; rates and energies share
// the same (angular frequency) units.

namespace trispin {

using cplx = std::complex<double>;

struct CavityParams {
    double gamma0 = 1.0;        // cavity decay rate, > 0
    double chi = 0.0;           // dispersive shift g^2/delta
    double delta = 0.0;         // detuning of the fields from the atomic transition
    double lambda_drive = 0.0;  // amplitude of the off-resonant drive on cavity 1
    double phi12 = 0.0;         // fiber phase delays (radians)
    double phi21 = 0.0;
    double phi23 = 0.0;
    double phi32 = 0.0;
    double nu = 0.0;            // fiber dissipation per unit length, >= 0
    double fiber_length = 0.0;  // total fiber length, >= 0

    bool operator==(const CavityParams&) const = default;
};

// Coherent amplitudes of the three cavity fields at the mean-field fixed point.
struct FieldSteadyState {
    cplx alpha;    // cavity 1
    cplx beta;     // cavity 2
    cplx gamma_c;  // cavity 3
};

struct CouplingSet {
    double j12 = 0.0;
    double j23 = 0.0;
    double j31 = 0.0;
    double gamma_laser = 0.0;  // local laser coupling strength, >= 0

    bool operator==(const CouplingSet&) const = default;
};

// M = i*delta + gamma0, the complex single-cavity response rate.
cplx response_rate(const CavityParams& p);

// W^2 = gamma0^2 [1/4 + e^{i(phi21+phi12)} + e^{i(phi32+phi23)}], the
// round-trip fiber feedback factor entering the coupling denominators.
cplx fiber_loop_factor(const CavityParams& p);

// Throws ValidationError if the parameter invariants are violated
// (gamma0 > 0, nu >= 0, fiber_length >= 0, everything finite).
void validate(const CavityParams& p);

// Closed-form steady-state amplitudes. Throws DegenerateSteadyState when the
// alpha denominator magnitude is <= 1e-12.
FieldSteadyState steady_state_printed(const CavityParams& p);

// Direct solve of the mean-field fixed-point linear system
//   M a = Lambda + g0 e^{i phi12} b
//   M b = g0 e^{i phi21} a + g0 e^{i phi23} c
//   M c = g0 e^{i phi32} b
// Throws SingularSystem when |det| <= 1e-12. Note: this and the closed form
// above do not agree in general; both are kept on purpose (see README).
FieldSteadyState steady_state_firstprinciples(const CavityParams& p);

// Relaxes the mean-field ODE system (the fixed-point equations with d/dt
// retained) from zero amplitudes by classical RK4. Throws StepTooLarge when
// gamma0*dt >= 0.1 and NotConverged when the final derivative magnitude
// exceeds 1e-6 (short t_end, or a non-attracting fixed point).
FieldSteadyState meanfield_integrate(const CavityParams& p, double t_end, double dt);

// Effective Ising couplings from the steady amplitudes. gamma_laser is not a
// cavity quantity and is left at 0 for the caller to fill in.
// Throws DegenerateCoupling when |M^2 - W^2| <= 1e-12.
CouplingSet couplings(const CavityParams& p, const FieldSteadyState& s);

// Attenuates each J by e^{-nu*length}; gamma_laser is unchanged.
CouplingSet apply_fiber_loss(const CouplingSet& c, double nu, double length);

}  // namespace trispin
