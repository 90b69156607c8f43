#ifndef HILL_MONODROMY_HPP
#define HILL_MONODROMY_HPP

#include <complex>
#include <numbers>

#include "hill/potential.hpp"

namespace hill {

/// Spectral parameter z of -psi'' + V psi = z psi.
using SpectralPoint = cdouble;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Tolerances and budget for the adaptive Dormand-Prince 5(4) stepper.
struct IntegratorConfig {
  double rtol = 1e-12;
  double atol = 1e-14;
  double initial_step = two_pi / 256.0;
  long max_steps = 1'000'000;
};

/// Values of the normalized fundamental system c, s and their x-derivatives
/// at x = 2pi.  The Wronskian c*s' - s*c' is identically 1.
struct MonodromyMatrix {
  cdouble c2pi;   // c(V;z,2pi)
  cdouble cp2pi;  // c'(V;z,2pi)
  cdouble s2pi;   // s(V;z,2pi)
  cdouble sp2pi;  // s'(V;z,2pi)

  cdouble trace() const { return c2pi + sp2pi; }
  cdouble det() const { return c2pi * sp2pi - s2pi * cp2pi; }
};

/// The two Floquet multipliers, roots of rho^2 - Delta*rho + 1 = 0,
/// with |rho_plus| >= |rho_minus| (ties broken by principal argument).
struct MultiplierPair {
  cdouble rho_plus;
  cdouble rho_minus;
};

/// Discriminant together with its z-derivative, both from one integration
/// of the variational system.
struct DiscriminantJet {
  cdouble delta;
  cdouble delta_dz;
};

/// Integrates both fundamental solutions of y'' = (V(x) - z) y over one
/// period as a single first-order complex system of dimension 4.
/// Throws IntegrationError on step underflow, exhausted step budget, or
/// non-finite state; throws InvalidArgument for non-positive tolerances.
MonodromyMatrix integrate_monodromy(const FourierPotential& v, SpectralPoint z,
                                    const IntegratorConfig& cfg = {});

/// Delta(V;z) = c(V;z,2pi) + s'(V;z,2pi).
cdouble discriminant(const FourierPotential& v, SpectralPoint z,
                     const IntegratorConfig& cfg = {});

/// Closed form for the free operator: Delta(0;z) = 2 cos(2pi sqrt(z)).
/// Branch-independent since cosine is even.
cdouble reference_discriminant(SpectralPoint z);

/// d(Delta)/dz, from the variational system integrated alongside the
/// fundamental one (dimension 8).
cdouble discriminant_derivative(const FourierPotential& v, SpectralPoint z,
                                const IntegratorConfig& cfg = {});

/// Delta and d(Delta)/dz in one pass.
DiscriminantJet discriminant_jet(const FourierPotential& v, SpectralPoint z,
                                 const IntegratorConfig& cfg = {});

/// Solves rho^2 - delta*rho + 1 = 0 via the cancellation-free form: the
/// larger root directly, the other as its reciprocal.
MultiplierPair multipliers(cdouble delta);

}  // namespace hill

#endif
