#include "hill/picard.hpp"

#include <cmath>
#include <utility>

#include "hill/errors.hpp"
#include "hill/monodromy.hpp"

namespace hill {

namespace {

void validate(const PicardConfig& cfg) {
  if (cfg.depth < 0) throw InvalidArgument("picard: depth must be >= 0");
  if (cfg.harmonics < 1) throw InvalidArgument("picard: harmonics must be >= 1");
  if (!(cfg.drop_tol >= 0.0)) throw InvalidArgument("picard: drop tolerance must be >= 0");
}

ExpSeries seed_series(PicardSeed seed) {
  ExpSeries::term_map t;
  if (seed == PicardSeed::cosine) {
    t.emplace(-1, cdouble{0.5, 0.0});  // cos x = (e^{ix} + e^{-ix}) / 2
    t.emplace(1, cdouble{0.5, 0.0});
  } else {
    t.emplace(-1, cdouble{0.0, 0.5});  // sin x = (e^{ix} - e^{-ix}) / 2i
    t.emplace(1, cdouble{0.0, -0.5});
  }
  return ExpSeries(std::move(t));
}

}  // namespace

ExpSeries picard_step(const FourierPotential& q, const ExpSeries& u_prev,
                      const PicardConfig& cfg) {
  validate(cfg);
  ExpSeries out;
  for (const auto& [k, a] : q.coeffs()) {
    for (const auto& [l, b] : u_prev.terms()) {
      const std::int64_t m = k + l;
      if (m == 1 || m == -1) throw ZeroExponentError(k, l);
      const cdouble gamma = a * b;
      // gamma e^{imt} antidifferentiated against sin(x-t):
      //   e^{ix}/(2i) * gamma (e^{i(m-1)x}-1)/(i(m-1))
      // - e^{-ix}/(2i) * gamma (e^{i(m+1)x}-1)/(i(m+1))
      const cdouble c_minus = -gamma / (2.0 * static_cast<double>(m - 1));
      const cdouble c_plus = gamma / (2.0 * static_cast<double>(m + 1));
      out.add_term(m, c_minus + c_plus);
      out.add_term(1, -c_minus);
      out.add_term(-1, -c_plus);
    }
  }
  return out.truncated(cfg.harmonics, cfg.drop_tol);
}

PicardSum picard_sum(const FourierPotential& q, PicardSeed seed, const PicardConfig& cfg) {
  validate(cfg);
  PicardSum result;
  ExpSeries iterate = seed_series(seed);
  result.sum = iterate;
  result.iterates.push_back(iterate);
  result.iterate_norms.push_back(iterate.sup_norm_bound());
  for (int j = 1; j <= cfg.depth; ++j) {
    iterate = picard_step(q, iterate, cfg);
    result.iterates.push_back(iterate);
    result.iterate_norms.push_back(iterate.sup_norm_bound());
    result.sum += iterate;
  }
  result.last_iterate_norm = result.iterate_norms.back();
  result.converged = result.last_iterate_norm <= cfg.drop_tol;
  return result;
}

cdouble picard_discriminant(const FourierPotential& v, int n, const PicardConfig& cfg) {
  return picard_diagnostics(v, n, cfg).delta;
}

PicardDiagnostics picard_diagnostics(const FourierPotential& v, int n, const PicardConfig& cfg) {
  if (n < 3) throw InvalidArgument("picard discriminant: n must be >= 3");
  validate(cfg);
  PicardDiagnostics d;
  d.q = scale(v, n);
  d.cosine = picard_sum(d.q, PicardSeed::cosine, cfg);
  d.sine = picard_sum(d.q, PicardSeed::sine, cfg);
  d.delta = d.cosine.sum.eval(two_pi) + d.sine.sum.derivative().eval(two_pi);
  return d;
}

cdouble vanishing_integral(const ExpSeries& u, std::int64_t k, std::int64_t n) {
  if (k < 1) throw InvalidArgument("vanishing_integral: k must be a positive integer");
  // Termwise: gamma e^{imt} integrates to 2pi gamma iff m = 0.
  return two_pi * (u.coeff(-(k * n + 1)) - u.coeff(-(k * n - 1)));
}

}  // namespace hill
