#include "hill/monodromy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "hill/errors.hpp"

namespace hill {

namespace {

// Dormand-Prince 5(4) pair, FSAL.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat, for the embedded 4th-order error estimate.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

template <std::size_t N>
using State = std::array<cdouble, N>;

template <std::size_t N, typename Rhs>
State<N> integrate_dopri5(Rhs&& rhs, State<N> y, double x_end, const IntegratorConfig& cfg) {
  if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0))
    throw InvalidArgument("integrator tolerances must be positive");

  // PI step controller constants (Hairer & Wanner).
  constexpr double beta = 0.04, alpha = 0.2 - 0.75 * beta;
  constexpr double safety = 0.9, min_scale = 0.2, max_scale = 10.0;

  double x = 0.0;
  double h = std::min(cfg.initial_step, x_end);
  double err_old = 1e-4;
  bool rejected = false;

  State<N> k1, k2, k3, k4, k5, k6, k7, yt, ynew;
  rhs(x, y, k1);

  for (long step = 0; step < cfg.max_steps;) {
    if (x >= x_end) return y;
    h = std::min(h, x_end - x);
    if (!(h > 0.0) || x + h == x)
      throw IntegrationError("step size underflow", x);

    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    rhs(x + c2 * h, yt, k2);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(x + c3 * h, yt, k3);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(x + c4 * h, yt, k4);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(x + c5 * h, yt, k5);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(x + h, yt, k6);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(x + h, ynew, k7);

    double err_sq = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const cdouble e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double scale = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(e) / scale;
      err_sq += r * r;
    }
    const double err = std::sqrt(err_sq / N);
    if (!std::isfinite(err)) throw IntegrationError("non-finite state", x);
    ++step;

    if (err <= 1.0) {
      x += h;
      y = ynew;
      k1 = k7;  // FSAL
      double scale;
      if (err == 0.0) {
        scale = max_scale;
      } else {
        scale = safety * std::pow(err, -alpha) * std::pow(err_old, beta);
        scale = std::clamp(scale, min_scale, max_scale);
      }
      if (rejected) scale = std::min(scale, 1.0);
      h *= scale;
      err_old = std::max(err, 1e-4);
      rejected = false;
    } else {
      h *= std::max(safety * std::pow(err, -alpha), min_scale);
      rejected = true;
    }
  }
  throw IntegrationError("step budget exhausted", 0.0);
}

}  // namespace

MonodromyMatrix integrate_monodromy(const FourierPotential& v, SpectralPoint z,
                                    const IntegratorConfig& cfg) {
  auto rhs = [&v, z](double x, const State<4>& y, State<4>& dy) {
    const cdouble w = v.evaluate(x) - z;  // y'' = (V - z) y
    dy[0] = y[1];
    dy[1] = w * y[0];
    dy[2] = y[3];
    dy[3] = w * y[2];
  };
  const State<4> y = integrate_dopri5<4>(rhs, State<4>{1.0, 0.0, 0.0, 1.0}, two_pi, cfg);
  return MonodromyMatrix{y[0], y[1], y[2], y[3]};
}

cdouble discriminant(const FourierPotential& v, SpectralPoint z, const IntegratorConfig& cfg) {
  return integrate_monodromy(v, z, cfg).trace();
}

cdouble reference_discriminant(SpectralPoint z) { return 2.0 * std::cos(two_pi * std::sqrt(z)); }

DiscriminantJet discriminant_jet(const FourierPotential& v, SpectralPoint z,
                                 const IntegratorConfig& cfg) {
  // Components 4..7 solve the z-derivative of the fundamental system:
  // (d_z y)'' = (V - z) d_z y - y.
  auto rhs = [&v, z](double x, const State<8>& y, State<8>& dy) {
    const cdouble w = v.evaluate(x) - z;
    dy[0] = y[1];
    dy[1] = w * y[0];
    dy[2] = y[3];
    dy[3] = w * y[2];
    dy[4] = y[5];
    dy[5] = w * y[4] - y[0];
    dy[6] = y[7];
    dy[7] = w * y[6] - y[2];
  };
  const State<8> y = integrate_dopri5<8>(
      rhs, State<8>{1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0}, two_pi, cfg);
  return DiscriminantJet{y[0] + y[3], y[4] + y[7]};
}

cdouble discriminant_derivative(const FourierPotential& v, SpectralPoint z,
                                const IntegratorConfig& cfg) {
  return discriminant_jet(v, z, cfg).delta_dz;
}

MultiplierPair multipliers(cdouble delta) {
  if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag()))
    throw InvalidArgument("multipliers: delta must be finite");
  cdouble root = std::sqrt(delta * delta - 4.0);
  if (std::real(std::conj(delta) * root) < 0.0) root = -root;
  cdouble big = 0.5 * (delta + root);
  if (big == cdouble{0.0, 0.0}) big = {1.0, 0.0};  // delta^2 = 4 handled above; unreachable guard
  cdouble small = 1.0 / big;

  const double mb = std::abs(big), ms = std::abs(small);
  if (std::abs(mb - ms) <= 8.0 * std::numeric_limits<double>::epsilon() * mb) {
    if (std::arg(big) < std::arg(small)) std::swap(big, small);
  }
  return MultiplierPair{big, small};
}

}  // namespace hill
