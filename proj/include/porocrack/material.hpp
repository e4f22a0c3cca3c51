#ifndef POROCRACK_MATERIAL_HPP
#define POROCRACK_MATERIAL_HPP

#include <optional>
#include <utility>

#include "porocrack/sym_tensor.hpp"

namespace porocrack {

// Density-dependent isotropic elasticity. The moduli carry a common factor
// 1/(1 + beta tr(eps)), so stiffness tracks the local volume change;
// beta = 0 recovers classical linearized elasticity.
struct MaterialParams {
    double E = 1.0e4;      // Young's modulus, Pa
    double nu = 0.3;       // Poisson ratio
    double beta = 0.0;     // density-coupling parameter
    std::optional<double> rho0;  // reference density, kg/m^3 (diagnostic only)

    // throws ConfigError when out of domain
    void validate() const;

    double c1bar() const { return E / (1.0 + nu); }                       // = 2 mu
    double c2bar() const { return E / ((1.0 + nu) * (1.0 - 2.0 * nu)); }
    double C1() const { return (1.0 + nu) / E; }
    double C2() const { return -nu / E; }

    // classical Lame constants (the beta = 0 limit)
    double mu0() const { return E / (2.0 * (1.0 + nu)); }
    double lambda0() const { return nu * E / ((1.0 + nu) * (1.0 - 2.0 * nu)); }
};

// lambda(tr eps), mu(tr eps) of the generalized model. Throws
// StrainLimitError when 1 + beta tr_eps <= 0.
std::pair<double, double> lame_generalized(const MaterialParams& p, double tr_eps);

// T = [c1bar eps + c2bar nu tr(eps) I] / (1 + beta tr(eps)).
// Throws StrainLimitError when the denominator is nonpositive.
SymTensor3 stress_from_strain(const MaterialParams& p, const SymTensor3& eps);

// Closed-form inverse obtained by tracing the constitutive relation:
//   tr eps = a tr T / (1 - beta a tr T),  a = C1 + 3 C2 = (1 - 2 nu)/E,
// then eps = (1 + beta tr eps) (C1 T + C2 tr(T) I).
// Throws StrainLimitError when the trace denominator vanishes.
SymTensor3 strain_from_stress(const MaterialParams& p, const SymTensor3& T);

// rho = rho0 / (1 + tr eps); requires rho0 set and 1 + tr_eps > 0.
double density_current(const MaterialParams& p, double tr_eps);

// W = eps : T
inline double strain_energy_density(const SymTensor3& eps, const SymTensor3& T) {
    return eps.ddot(T);
}

inline SymTensor3 strain_from_displacement_gradient(const Mat3& grad_u) {
    return SymTensor3::sym_part(grad_u);
}

}  // namespace porocrack

#endif
