#ifndef HILL_PICARD_HPP
#define HILL_PICARD_HPP

#include <vector>

#include "hill/exp_series.hpp"
#include "hill/potential.hpp"

namespace hill {

/// Truncation policy for the exponential-series Picard iteration.
struct PicardConfig {
  int depth = 12;                // J: number of iterates summed past the seed
  std::int64_t harmonics = 60;   // L: exponents |l| > L are dropped
  double drop_tol = 1e-300;      // coefficients |b| < drop_tol are dropped
};

enum class PicardSeed { cosine, sine };

/// One Volterra iterate in closed form: antidifferentiates each product term
/// of q(t) * u_prev(t) against the kernel sin(x-t).  Throws ZeroExponentError
/// when a product term's shifted exponent hits zero (the antiderivative would
/// not be periodic).
ExpSeries picard_step(const FourierPotential& q, const ExpSeries& u_prev,
                      const PicardConfig& cfg);

struct PicardSum {
  ExpSeries sum;                       // sum_{j=0..J} u_j, truncated per config
  std::vector<ExpSeries> iterates;     // u_0 .. u_J as iterated
  std::vector<double> iterate_norms;   // sup-norm bound of each iterate
  double last_iterate_norm = 0.0;
  bool converged = true;               // last iterate norm <= drop_tol
};

/// Sums the Picard iterates from the cosine or sine seed.
PicardSum picard_sum(const FourierPotential& q, PicardSeed seed, const PicardConfig& cfg);

/// Integration-free discriminant of the scaled potential q_n at w = 1:
/// C(2pi) + S'(2pi) with C, S the summed cosine/sine series.  Requires n >= 3.
cdouble picard_discriminant(const FourierPotential& v, int n, const PicardConfig& cfg = {});

/// Both Picard sums plus the assembled discriminant, for reporting.
struct PicardDiagnostics {
  FourierPotential q;  // the scaled potential actually iterated
  PicardSum cosine;
  PicardSum sine;
  cdouble delta;
};
PicardDiagnostics picard_diagnostics(const FourierPotential& v, int n,
                                     const PicardConfig& cfg = {});

/// Closed-form value of int_0^{2pi} (e^{i(kn+1)t} - e^{i(kn-1)t}) u(t) dt:
/// only a constant term in the integrand survives, contributing 2pi times its
/// coefficient.  A nonzero return is a finding, not an error.
cdouble vanishing_integral(const ExpSeries& u, std::int64_t k, std::int64_t n);

}  // namespace hill

#endif
