#ifndef HILL_SPECTRUM_HPP
#define HILL_SPECTRUM_HPP

#include <string>
#include <vector>

#include "hill/monodromy.hpp"
#include "hill/potential.hpp"

namespace hill {

/// Lemma-style membership test: z is in the spectrum iff Delta(V;z) is real
/// with |Delta| <= 2.  distance = max(|Im Delta|, max(0, |Re Delta| - 2)).
struct MembershipVerdict {
  bool in_spectrum;
  cdouble delta;
  double distance;
};

MembershipVerdict membership(const FourierPotential& v, SpectralPoint z, double tol,
                             const IntegratorConfig& icfg = {});

enum class BandEdgeKind {
  delta_plus_two,   // Delta = +2 (periodic eigenvalue)
  delta_minus_two,  // Delta = -2 (antiperiodic eigenvalue)
  window            // clipped at the scan window
};

struct BandInterval {
  double lo = 0.0;
  double hi = 0.0;
  BandEdgeKind lo_kind = BandEdgeKind::window;
  BandEdgeKind hi_kind = BandEdgeKind::window;
};

struct BandScanConfig {
  double scan_step = 0.01;
  double bisect_width = 1e-12;   // bracket width before Newton polish
  int newton_polish = 5;
  double root_tol = 1e-9;        // |Delta -+ 2| acceptance at an edge
  double tangency_tol = 1e-6;    // flag in-band local minima of |Delta -+ 2|
  IntegratorConfig integrator;
};

struct BandScanResult {
  std::vector<BandInterval> bands;          // disjoint, ordered
  std::vector<double> possible_tangencies;  // |Delta| = 2 touchings inside bands
  std::vector<std::string> warnings;        // e.g. unresolved double crossings
};

/// Maximal intervals of {z real : |Delta(V;z)| <= 2} inside [zmin, zmax]
/// for a real-valued potential: sign scan, bisection, Newton polish.
BandScanResult band_edges_real(const FourierPotential& v, double zmin, double zmax,
                               const BandScanConfig& cfg = {});

enum class ArcTermination { band_edge, max_steps, box_exit, branch_point };

struct SpectralArc {
  std::vector<cdouble> points;
  ArcTermination termination = ArcTermination::max_steps;
};

struct ArcConfig {
  double initial_step = 1e-2;
  double shrink = 0.5;
  double grow = 1.3;
  double max_step_factor = 100.0;    // cap: h <= max_step_factor * initial_step
  double corrector_tol = 1e-10;      // |Im Delta| target per point
  int max_corrector_iters = 12;
  double branch_threshold = 1e-8;    // |Delta'| below this stops the trace
  double edge_margin = 1e-10;        // |Re Delta| must exceed 2 by this to stop
  int max_steps = 10'000;
  double arc_tol = 1e-8;             // membership tolerance for seed and points
  int direction = +1;                // +1 or -1 along the normalized tangent
  double box_re_min = -16.0, box_re_max = 16.0;
  double box_im_min = -16.0, box_im_max = 16.0;
  IntegratorConfig integrator;
};

/// Predictor-corrector continuation of the level curve Im Delta = 0 with
/// |Re Delta| <= 2, starting from a seed already on the spectrum.
SpectralArc trace_arc(const FourierPotential& v, cdouble seed, const ArcConfig& cfg = {});

struct EigenvalueConfig {
  double root_tol = 1e-9;   // |Delta - 2| acceptance
  int max_newton = 60;
  double fd_step = 1e-6;    // relative step for the finite-difference Delta''
  IntegratorConfig integrator;
};

struct EigenvalueResult {
  std::vector<cdouble> values;        // one per converged seed, seed order
  std::vector<std::string> warnings;  // per-seed non-convergence reports
};

/// Roots of Delta(V;z) - 2 = 0 by Newton from seeds z = n^2, n = 0..count-1,
/// with a critical-point polish when the root is a double one (closed gap).
EigenvalueResult periodic_eigenvalues(const FourierPotential& v, int count,
                                      const EigenvalueConfig& cfg = {});

struct GridSpec {
  double re_min, re_max, re_step;
  double im_min, im_max, im_step;
};

struct GridPoint {
  cdouble z;
  cdouble delta;
  double deviation;  // meaning depends on the producing scan
};

struct GasymovReport {
  std::vector<GridPoint> points;  // deviation = |Delta - 2cos(2pi sqrt z)|
  double max_deviation = 0.0;
  cdouble argmax_z;
  double tol = 0.0;
  bool pass = false;
};

/// Grid verification of Delta(V;z) = 2cos(2pi sqrt z) for a Gasymov-class
/// potential.  Throws NotGasymovClassError otherwise.
GasymovReport verify_gasymov(const FourierPotential& v, const GridSpec& grid, double tol,
                             const IntegratorConfig& icfg = {});

struct HomotopyReport {
  std::vector<double> eps;
  std::vector<cdouble> delta;   // Delta(eps V; 1/n^2)
  cdouble target;               // 2cos(2pi/n)
  double max_deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Evaluates Delta(eps V; 1/n^2) on a uniform eps-grid over [0,1] and
/// compares against the constant 2cos(2pi/n).  Requires n >= 3, steps >= 2.
HomotopyReport homotopy_scan(const FourierPotential& v, int n, int steps, double tol,
                             const IntegratorConfig& icfg = {});

}  // namespace hill

#endif
