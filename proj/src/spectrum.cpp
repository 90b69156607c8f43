#include "hill/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

#include "hill/errors.hpp"
#include "hill/parallel.hpp"

namespace hill {

namespace {

double spectral_distance(cdouble delta) {
  return std::max(std::abs(delta.imag()), std::max(0.0, std::abs(delta.real()) - 2.0));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string fmt(cdouble z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

}  // namespace

MembershipVerdict membership(const FourierPotential& v, SpectralPoint z, double tol,
                             const IntegratorConfig& icfg) {
  if (!(tol > 0.0)) throw InvalidArgument("membership: tol must be positive");
  const cdouble delta = discriminant(v, z, icfg);
  const double dist = spectral_distance(delta);
  return MembershipVerdict{dist <= tol, delta, dist};
}

// ---------------------------------------------------------------------------
// Real-axis band structure

namespace {

struct RealJet {
  double delta;
  double delta_dz;
};

RealJet real_jet(const FourierPotential& v, double z, const IntegratorConfig& icfg) {
  const DiscriminantJet j = discriminant_jet(v, z, icfg);
  return RealJet{j.delta.real(), j.delta_dz.real()};
}

// Root of Delta - target in [a, b] given a sign change: bisection to the
// requested bracket width, then a few Newton polish steps.
double refine_edge(const FourierPotential& v, double a, double b, double fa, double target,
                   const BandScanConfig& cfg) {
  auto f = [&](double z) { return discriminant(v, z, cfg.integrator).real() - target; };
  while (b - a > cfg.bisect_width) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // bracket at rounding limit
    const double fm = f(mid);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  double z = 0.5 * (a + b);
  for (int it = 0; it < cfg.newton_polish; ++it) {
    const RealJet j = real_jet(v, z, cfg.integrator);
    const double g = j.delta - target;
    if (std::abs(g) <= 0.01 * cfg.root_tol) break;
    if (j.delta_dz == 0.0) break;
    const double step = g / j.delta_dz;
    if (!std::isfinite(step) || std::abs(step) > cfg.scan_step) break;
    z -= step;
  }
  return z;
}

// Newton on Delta' = 0 with a finite-difference second derivative; used to
// pin closed-gap tangencies and double periodic eigenvalues.
double polish_critical_point(const FourierPotential& v, double z, const IntegratorConfig& icfg,
                             double fd_step) {
  for (int it = 0; it < 30; ++it) {
    const double d1 = real_jet(v, z, icfg).delta_dz;
    if (std::abs(d1) < 1e-13) break;
    const double h = fd_step * std::max(1.0, std::abs(z));
    const double d2 =
        (real_jet(v, z + h, icfg).delta_dz - real_jet(v, z - h, icfg).delta_dz) / (2.0 * h);
    if (!std::isfinite(d2) || d2 == 0.0) break;
    const double step = d1 / d2;
    if (!std::isfinite(step) || std::abs(step) > 0.1 * std::max(1.0, std::abs(z))) break;
    z -= step;
    if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

BandScanResult band_edges_real(const FourierPotential& v, double zmin, double zmax,
                               const BandScanConfig& cfg) {
  if (!v.is_real())
    throw InvalidArgument("band_edges_real: potential must be real-valued");
  if (!(zmin < zmax)) throw InvalidArgument("band_edges_real: zmin < zmax required");
  if (!(cfg.scan_step > 0.0)) throw InvalidArgument("band_edges_real: scan step must be positive");

  const std::size_t cells =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((zmax - zmin) / cfg.scan_step)));
  const double h = (zmax - zmin) / static_cast<double>(cells);

  std::vector<double> zs(cells + 1), d(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) zs[i] = zmin + h * static_cast<double>(i);
  zs[cells] = zmax;
  parallel_for(cells + 1,
               [&](std::size_t i) { d[i] = discriminant(v, zs[i], cfg.integrator).real(); });

  BandScanResult result;
  auto in_band = [&](std::size_t i) { return std::abs(d[i]) <= 2.0; };

  std::optional<std::pair<double, BandEdgeKind>> open_lo;
  if (in_band(0)) open_lo = {zmin, BandEdgeKind::window};

  auto edge_kind = [](double target) {
    return target > 0.0 ? BandEdgeKind::delta_plus_two : BandEdgeKind::delta_minus_two;
  };

  for (std::size_t i = 0; i < cells; ++i) {
    const bool in0 = in_band(i), in1 = in_band(i + 1);
    if (in0 == in1) {
      // An in-band cell can still hide a full band between out points when the
      // discriminant swings across both +2 and -2 within one step.
      if (!in0 && ((d[i] > 2.0) != (d[i + 1] > 2.0))) {
        result.warnings.push_back("scan step too coarse: band narrower than the scan step near z=" +
                                  fmt(0.5 * (zs[i] + zs[i + 1])));
        const double t_first = d[i] > 2.0 ? 2.0 : -2.0;
        const double t_second = -t_first;
        const double lo = refine_edge(v, zs[i], zs[i + 1], d[i] - t_first, t_first, cfg);
        const double hi = refine_edge(v, lo, zs[i + 1],
                                      discriminant(v, lo, cfg.integrator).real() - t_second,
                                      t_second, cfg);
        result.bands.push_back(BandInterval{lo, hi, edge_kind(t_first), edge_kind(t_second)});
      }
      continue;
    }
    const double d_out = in0 ? d[i + 1] : d[i];
    const double target = d_out > 2.0 ? 2.0 : -2.0;
    const double root = refine_edge(v, zs[i], zs[i + 1], d[i] - target, target, cfg);
    if (!in0 && in1) {
      open_lo = {root, edge_kind(target)};
    } else {
      const std::pair<double, BandEdgeKind> lo =
          open_lo ? *open_lo : std::pair<double, BandEdgeKind>{zs[i], BandEdgeKind::window};
      result.bands.push_back(BandInterval{lo.first, root, lo.second, edge_kind(target)});
      open_lo.reset();
    }
  }
  if (open_lo) {
    result.bands.push_back(
        BandInterval{open_lo->first, zmax, open_lo->second, BandEdgeKind::window});
  }

  // Possible tangencies: in-band local minima of the distance to |Delta| = 2.
  for (std::size_t i = 1; i + 1 <= cells; ++i) {
    if (!(in_band(i - 1) && in_band(i) && in_band(i + 1))) continue;
    const auto dist2 = [&](std::size_t j) {
      return std::min(std::abs(d[j] - 2.0), std::abs(d[j] + 2.0));
    };
    if (dist2(i) <= dist2(i - 1) && dist2(i) <= dist2(i + 1) && dist2(i) < cfg.tangency_tol) {
      const double z = polish_critical_point(v, zs[i], cfg.integrator, 1e-6);
      const double dd = discriminant(v, z, cfg.integrator).real();
      if (std::min(std::abs(dd - 2.0), std::abs(dd + 2.0)) < cfg.tangency_tol)
        result.possible_tangencies.push_back(z);
    }
  }

  return result;
}

// ---------------------------------------------------------------------------
// Arc tracing

namespace {

struct Corrected {
  cdouble z;
  DiscriminantJet jet;
};

std::optional<Corrected> correct_onto_curve(const FourierPotential& v, cdouble z, cdouble normal,
                                            const ArcConfig& cfg) {
  for (int it = 0; it < cfg.max_corrector_iters; ++it) {
    const DiscriminantJet jet = discriminant_jet(v, z, cfg.integrator);
    const double im = jet.delta.imag();
    if (std::abs(im) <= cfg.corrector_tol) return Corrected{z, jet};
    const double slope = std::imag(jet.delta_dz * normal);
    if (!std::isfinite(slope) || std::abs(slope) < 1e-300) return std::nullopt;
    z -= normal * (im / slope);
  }
  return std::nullopt;
}

cdouble unit_tangent(const DiscriminantJet& jet) {
  return std::conj(jet.delta_dz) / std::abs(jet.delta_dz);
}

bool inside_box(cdouble z, const ArcConfig& cfg) {
  return z.real() >= cfg.box_re_min && z.real() <= cfg.box_re_max && z.imag() >= cfg.box_im_min &&
         z.imag() <= cfg.box_im_max;
}

// Complex Newton for Delta(z) = target, polishing a band edge.
cdouble polish_band_edge(const FourierPotential& v, cdouble z, double target,
                         const ArcConfig& cfg) {
  for (int it = 0; it < 40; ++it) {
    const DiscriminantJet jet = discriminant_jet(v, z, cfg.integrator);
    const cdouble g = jet.delta - target;
    if (std::abs(g) <= 1e-12) break;
    if (std::abs(jet.delta_dz) < 1e-300) break;
    const cdouble step = g / jet.delta_dz;
    if (std::abs(step) > 1.0) break;
    z -= step;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

SpectralArc trace_arc(const FourierPotential& v, cdouble seed, const ArcConfig& cfg) {
  if (!(cfg.initial_step > 0.0) || !(cfg.shrink > 0.0 && cfg.shrink < 1.0) || !(cfg.grow >= 1.0))
    throw InvalidArgument("trace_arc: bad step-control configuration");
  if (cfg.direction != 1 && cfg.direction != -1)
    throw InvalidArgument("trace_arc: direction must be +1 or -1");

  DiscriminantJet jet = discriminant_jet(v, seed, cfg.integrator);
  if (spectral_distance(jet.delta) > cfg.arc_tol)
    throw InvalidArgument("trace_arc: seed " + fmt(seed) + " is not on the spectrum (distance " +
                          fmt(spectral_distance(jet.delta)) + ")");

  SpectralArc arc;
  cdouble z = seed;

  // A seed at a critical point of Delta (e.g. a closed-gap touching) has no
  // usable tangent; probe the axis directions for a nearby on-spectrum point.
  if (std::abs(jet.delta_dz) < cfg.branch_threshold) {
    arc.points.push_back(z);
    const double p = cfg.initial_step;
    const cdouble probes[4] = {z + p, z - p, z + cdouble{0.0, p}, z - cdouble{0.0, p}};
    const int order[4] = {cfg.direction > 0 ? 0 : 1, cfg.direction > 0 ? 1 : 0, 2, 3};
    bool moved = false;
    for (int idx : order) {
      const DiscriminantJet pj = discriminant_jet(v, probes[idx], cfg.integrator);
      if (spectral_distance(pj.delta) <= cfg.arc_tol &&
          std::abs(pj.delta_dz) >= cfg.branch_threshold) {
        z = probes[idx];
        jet = pj;
        moved = true;
        break;
      }
    }
    if (!moved) {
      arc.termination = ArcTermination::branch_point;
      return arc;
    }
  }

  cdouble t = unit_tangent(jet);
  if (t.real() < 0.0 || (t.real() == 0.0 && t.imag() < 0.0)) t = -t;
  t *= static_cast<double>(cfg.direction);

  // Snap onto Im Delta = 0 before stepping.
  if (auto snapped = correct_onto_curve(v, z, cdouble{0.0, 1.0} * t, cfg)) {
    z = snapped->z;
    jet = snapped->jet;
  }
  arc.points.push_back(z);

  double h = cfg.initial_step;
  const double h_min = cfg.initial_step * 1e-6;
  cdouble t_prev = t;

  for (int step = 0; step < cfg.max_steps; ++step) {
    if (std::abs(jet.delta_dz) < cfg.branch_threshold) {
      arc.termination = ArcTermination::branch_point;
      return arc;
    }
    t = unit_tangent(jet);
    if (std::real(t * std::conj(t_prev)) < 0.0) t = -t;

    std::optional<Corrected> next;
    while (true) {
      next = correct_onto_curve(v, z + h * t, cdouble{0.0, 1.0} * t, cfg);
      if (next && std::abs(next->z - z) <= 3.0 * h) break;
      h *= cfg.shrink;
      if (h < h_min)
        throw Error("trace_arc: corrector failed to converge near z=" + fmt(z + h * t));
    }

    t_prev = t;
    z = next->z;
    jet = next->jet;
    arc.points.push_back(z);
    h = std::min(h * cfg.grow, cfg.initial_step * cfg.max_step_factor);

    if (std::abs(jet.delta.real()) > 2.0 + cfg.edge_margin) {
      const double target = jet.delta.real() > 0.0 ? 2.0 : -2.0;
      arc.points.back() = polish_band_edge(v, z, target, cfg);
      arc.termination = ArcTermination::band_edge;
      return arc;
    }
    if (!inside_box(z, cfg)) {
      arc.termination = ArcTermination::box_exit;
      return arc;
    }
  }
  arc.termination = ArcTermination::max_steps;
  return arc;
}

// ---------------------------------------------------------------------------
// Periodic eigenvalues

EigenvalueResult periodic_eigenvalues(const FourierPotential& v, int count,
                                      const EigenvalueConfig& cfg) {
  if (count < 1) throw InvalidArgument("periodic_eigenvalues: count must be >= 1");
  EigenvalueResult result;
  for (int n = 0; n < count; ++n) {
    cdouble z = static_cast<double>(n) * static_cast<double>(n);
    bool value_converged = false;
    for (int it = 0; it < cfg.max_newton; ++it) {
      const DiscriminantJet jet = discriminant_jet(v, z, cfg.integrator);
      const cdouble g = jet.delta - 2.0;
      if (std::abs(g) <= cfg.root_tol) {
        value_converged = true;
        break;
      }
      if (std::abs(jet.delta_dz) < 1e-300) break;
      cdouble step = g / jet.delta_dz;
      const double cap = 0.5 * std::max(1.0, std::abs(z));
      if (std::abs(step) > cap) step *= cap / std::abs(step);
      z -= step;
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    }
    if (!value_converged) {
      result.warnings.push_back("seed z=" + std::to_string(n * n) +
                                ": Newton did not reach |Delta-2| <= " + fmt(cfg.root_tol));
      continue;
    }
    // Double roots (closed gaps) sit at critical points of Delta; Newton on
    // Delta' recovers the position accuracy the value test cannot give.
    if (std::abs(discriminant_derivative(v, z, cfg.integrator)) < 1e-6 &&
        std::abs(z.imag()) < 1e-8) {
      const double polished = polish_critical_point(v, z.real(), cfg.integrator, cfg.fd_step);
      if (std::abs(discriminant(v, polished, cfg.integrator) - 2.0) <= cfg.root_tol)
        z = polished;
    }
    result.values.push_back(z);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Grid and homotopy verification

namespace {

std::vector<double> uniform_grid(double lo, double hi, double step, const char* what) {
  if (!(step > 0.0)) throw InvalidArgument(std::string(what) + ": step must be positive");
  if (!(lo <= hi)) throw InvalidArgument(std::string(what) + ": bounds must be ordered");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    const double v = lo + step * static_cast<double>(i);
    if (v > hi + 1e-9 * std::max(1.0, std::abs(hi))) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

GasymovReport verify_gasymov(const FourierPotential& v, const GridSpec& grid, double tol,
                             const IntegratorConfig& icfg) {
  if (!v.is_gasymov_class())
    throw NotGasymovClassError(
        "verify_gasymov: potential has modes k < 1; the identity is only claimed for "
        "positive-mode potentials");
  if (!(tol > 0.0)) throw InvalidArgument("verify_gasymov: tol must be positive");

  const auto res = uniform_grid(grid.re_min, grid.re_max, grid.re_step, "verify_gasymov re grid");
  const auto ims = uniform_grid(grid.im_min, grid.im_max, grid.im_step, "verify_gasymov im grid");

  GasymovReport report;
  report.tol = tol;
  report.points.resize(res.size() * ims.size());
  parallel_for(report.points.size(), [&](std::size_t idx) {
    const cdouble z{res[idx / ims.size()], ims[idx % ims.size()]};
    const cdouble delta = discriminant(v, z, icfg);
    report.points[idx] = GridPoint{z, delta, std::abs(delta - reference_discriminant(z))};
  });

  if (!report.points.empty()) report.argmax_z = report.points.front().z;
  for (const auto& p : report.points) {
    if (p.deviation > report.max_deviation) {
      report.max_deviation = p.deviation;
      report.argmax_z = p.z;
    }
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

HomotopyReport homotopy_scan(const FourierPotential& v, int n, int steps, double tol,
                             const IntegratorConfig& icfg) {
  if (n < 3) throw InvalidArgument("homotopy_scan: n must be >= 3");
  if (steps < 2) throw InvalidArgument("homotopy_scan: steps must be >= 2");
  if (!(tol > 0.0)) throw InvalidArgument("homotopy_scan: tol must be positive");

  const double nn = static_cast<double>(n);
  const cdouble z{1.0 / (nn * nn), 0.0};

  HomotopyReport report;
  report.tol = tol;
  report.target = reference_discriminant(z);  // 2cos(2pi/n)
  report.eps.resize(static_cast<std::size_t>(steps));
  report.delta.resize(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    report.eps[static_cast<std::size_t>(i)] = static_cast<double>(i) / (steps - 1);

  parallel_for(report.eps.size(), [&](std::size_t i) {
    report.delta[i] = discriminant(homotopy_member(v, report.eps[i]), z, icfg);
  });

  for (const auto& d : report.delta)
    report.max_deviation = std::max(report.max_deviation, std::abs(d - report.target));
  report.pass = report.max_deviation <= tol;
  return report;
}

}  // namespace hill
