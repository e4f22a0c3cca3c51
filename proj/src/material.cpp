#include "porocrack/material.hpp"

#include <cmath>
#include <string>

#include "porocrack/errors.hpp"

namespace porocrack {

void MaterialParams::validate() const {
    if (!(E > 0.0)) throw ConfigError("material.E must be positive, got " + std::to_string(E));
    if (!(nu > 0.0 && nu < 0.5))
        throw ConfigError("material.nu must lie in (0, 0.5), got " + std::to_string(nu));
    if (!std::isfinite(beta))
        throw ConfigError("material.beta must be finite");
    if (rho0 && !(*rho0 > 0.0))
        throw ConfigError("material.rho0 must be positive, got " + std::to_string(*rho0));
}

std::pair<double, double> lame_generalized(const MaterialParams& p, double tr_eps) {
    const double den = 1.0 + p.beta * tr_eps;
    if (!(den > 0.0))
        throw StrainLimitError("lame_generalized: 1 + beta tr(eps) = " + std::to_string(den)
                               + " <= 0", -1, -1, den);
    return {p.lambda0() / den, p.mu0() / den};
}

SymTensor3 stress_from_strain(const MaterialParams& p, const SymTensor3& eps) {
    const double tr = eps.trace();
    const double den = 1.0 + p.beta * tr;
    if (!(den > 0.0))
        throw StrainLimitError("stress_from_strain: 1 + beta tr(eps) = " + std::to_string(den)
                               + " <= 0", -1, -1, den);
    SymTensor3 T = eps * (p.c1bar() / den);
    const double vol = p.c2bar() * p.nu * tr / den;
    T[0] += vol;
    T[1] += vol;
    T[2] += vol;
    return T;
}

SymTensor3 strain_from_stress(const MaterialParams& p, const SymTensor3& T) {
    const double a = p.C1() + 3.0 * p.C2();  // (1 - 2 nu)/E
    const double trT = T.trace();
    const double d = 1.0 - p.beta * a * trT;
    if (std::abs(d) < 1e-12 * (1.0 + std::abs(p.beta * a * trT)))
        throw StrainLimitError("strain_from_stress: inversion denominator vanished");
    // scale = 1 + beta tr(eps) = 1/d exactly; evaluating it this way avoids
    // the cancellation of 1 + beta*(a trT/d) near the strain limit
    const double scale = 1.0 / d;
    SymTensor3 eps = T * (scale * p.C1());
    const double vol = scale * p.C2() * trT;
    eps[0] += vol;
    eps[1] += vol;
    eps[2] += vol;
    return eps;
}

double density_current(const MaterialParams& p, double tr_eps) {
    if (!p.rho0)
        throw ConfigError("density_current: rho0 not set");
    const double vol = 1.0 + tr_eps;
    if (!(vol > 0.0))
        throw StrainLimitError("density_current: 1 + tr(eps) = " + std::to_string(vol) + " <= 0");
    return *p.rho0 / vol;
}

}  // namespace porocrack
