// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hill/errors.hpp"
#include "hill/exp_series.hpp"
#include "hill/monodromy.hpp"
#include "hill/picard.hpp"
#include "hill/potential.hpp"
#include "hill/spectrum.hpp"
#include "oracles.hpp"

using hill::cdouble;
using hill::discriminant;
using hill::ExpSeries;
using hill::FourierPotential;
using hill::IntegratorConfig;
using hill::PicardConfig;
using hill::PicardSeed;
using hill::reference_discriminant;
using hill::two_pi;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

FourierPotential make(std::initializer_list<std::pair<std::int64_t, cdouble>> cs) {
  FourierPotential::coeff_map m;
  for (const auto& [k, a] : cs) m.emplace(k, a);
  return FourierPotential(std::move(m));
}

const cdouble I{0.0, 1.0};
const FourierPotential free_v{};
const FourierPotential gasymov1 = make({{1, 1.0}});
const FourierPotential gasymov3 = make({{1, 1.0}, {2, 0.5}, {5, 0.1 * I}});
const FourierPotential mathieu = make({{1, 1.0}, {-1, 1.0}});

const IntegratorConfig tight{1e-14, 1e-16, two_pi / 256.0, 1'000'000};
const hill::GridSpec paper_grid{-2.0, 9.0, 0.5, -2.0, 2.0, 0.5};

cdouble random_disk(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const cdouble z{u(rng), u(rng)};
    if (std::abs(z) <= 1.0) return radius * z;
  }
}

double scaled_err(cdouble a, cdouble b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

void c1_free_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double re = -2.0; re <= 9.0 + 1e-9; re += 0.5)
    for (double im = -2.0; im <= 2.0 + 1e-9; im += 0.5) {
      const cdouble z{re, im};
      worst = std::max(worst,
                       std::abs(discriminant(free_v, z, tight) - reference_discriminant(z)));
    }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  criterion(1, "free-operator identity on the grid", worst <= 1e-9,
            "max deviation " + sci(worst) + " <= 1e-09, " + sci(secs) + " s");
}

void c2_gasymov_identity() {
  const IntegratorConfig cfg{1e-13, 1e-15, two_pi / 256.0, 1'000'000};
  bool ok = true;
  std::string detail;
  for (const auto* v : {&gasymov1, &gasymov3}) {
    const auto report = verify_gasymov(*v, paper_grid, 1e-7, cfg);
    ok = ok && report.pass;
    if (!detail.empty()) detail += ", ";
    detail += "max deviation " + sci(report.max_deviation);
  }
  criterion(2, "gasymov identity for two potentials", ok, detail + " <= 1e-07");
}

void c3_point_identities() {
  double worst = 0.0;
  worst = std::max(worst, std::abs(discriminant(gasymov1, cdouble{1.0 / 9.0, 0.0}) - (-1.0)));
  worst = std::max(worst, std::abs(discriminant(gasymov1, cdouble{1.0 / 16.0, 0.0}) - 0.0));
  for (int n = 0; n <= 3; ++n) {
    const cdouble z{static_cast<double>(n * n), 0.0};
    worst = std::max(worst, std::abs(discriminant(gasymov1, z) - 2.0));
  }
  criterion(3, "point identities at 1/9, 1/16 and n^2", worst <= 1e-8,
            "max deviation " + sci(worst) + " <= 1e-08");
}

void c4_picard_path() {
  PicardConfig cfg;  // J=12, L=60
  double worst = 0.0;
  for (int n : {3, 4, 5})
    worst = std::max(worst, std::abs(hill::picard_discriminant(gasymov1, n, cfg) - 2.0));

  // frozen first iterate, re-derived independently before being pinned here
  const auto u0 = ExpSeries(ExpSeries::term_map{{-1, 0.5}, {1, 0.5}});
  const auto u1 = picard_step(make({{3, 9.0}}), u0, cfg);
  double table_err = 0.0;
  const std::pair<std::int64_t, double> expected[] = {
      {-1, -6.0 / 5.0}, {1, 3.0}, {2, -3.0 / 2.0}, {4, -3.0 / 10.0}};
  for (const auto& [l, b] : expected)
    table_err = std::max(table_err, std::abs(u1.coeff(l) - b));
  const bool ok = worst <= 1e-10 && table_err <= 1e-15 && u1.term_count() == 4;
  criterion(4, "picard discriminant and frozen u1 table", ok,
            "max |Delta-2| " + sci(worst) + " <= 1e-10, table error " + sci(table_err));
}

void c5_vanishing_integrals() {
  PicardConfig cfg;  // J=12
  bool all_zero = true;
  const auto q = scale(gasymov1, 3);
  for (PicardSeed seed : {PicardSeed::cosine, PicardSeed::sine}) {
    const auto sum = picard_sum(q, seed, cfg);
    for (const auto& u : sum.iterates)
      for (std::int64_t k = 1; k <= 5; ++k)
        all_zero = all_zero && hill::vanishing_integral(u, k, 3) == cdouble{0.0, 0.0};
  }
  bool mathieu_fires = false;
  try {
    (void)picard_sum(scale(mathieu, 3), PicardSeed::cosine, cfg);
  } catch (const hill::ZeroExponentError&) {
    mathieu_fires = true;
  }
  criterion(5, "vanishing integrals and the Mathieu failure mode", all_zero && mathieu_fires,
            std::string("all integrals exactly 0: ") + (all_zero ? "yes" : "no") +
                ", ZeroExponent on Mathieu: " + (mathieu_fires ? "yes" : "no"));
}

void c6_homotopy() {
  const auto report = homotopy_scan(gasymov1, 3, 11, 1e-8);
  double worst = 0.0;
  for (const auto& d : report.delta) worst = std::max(worst, std::abs(d - (-1.0)));
  criterion(6, "homotopy constancy of Delta(eps V; 1/9)", worst <= 1e-8,
            "max |Delta+1| " + sci(worst) + " <= 1e-08 over 11 eps values");
}

void c7_mathieu_bands() {
  const auto res = band_edges_real(mathieu, -2.0, 6.0);
  const auto per = hill::testing::hill_matrix_periodic(mathieu, 40);
  const auto anti = hill::testing::hill_matrix_antiperiodic(mathieu, 40);

  bool gap_nonempty = res.bands.size() >= 2 && res.bands[1].lo - res.bands[0].hi > 1e-3;
  double worst = 0.0;
  int edges = 0;
  auto check_edge = [&](double z, hill::BandEdgeKind kind) {
    if (kind == hill::BandEdgeKind::window) return;
    const auto& block = kind == hill::BandEdgeKind::delta_plus_two ? per : anti;
    double best = std::numeric_limits<double>::infinity();
    for (double e : block) best = std::min(best, std::abs(e - z));
    worst = std::max(worst, best);
    ++edges;
  };
  for (const auto& b : res.bands) {
    check_edge(b.lo, b.lo_kind);
    check_edge(b.hi, b.hi_kind);
  }
  criterion(7, "Mathieu counterexample band structure", gap_nonempty && worst <= 1e-6,
            "first gap nonempty: " + std::string(gap_nonempty ? "yes" : "no") + ", " +
                std::to_string(edges) + " edges vs oracle, max mismatch " + sci(worst));
}

void c8_property_suites() {
  std::mt19937 rng(240809);
  double det_err = 0.0;
  const std::vector<FourierPotential> vs{free_v, gasymov1, mathieu,
                                         make({{1, 0.3}, {2, 0.2 * I}})};
  for (const auto& v : vs) {
    for (int i = 0; i < 5; ++i)
      det_err = std::max(det_err,
                         std::abs(integrate_monodromy(v, random_disk(rng, 1.0)).det() - 1.0));
    for (const cdouble z : {cdouble{0.25, 0.0}, cdouble{-1.0, 0.0}})
      det_err = std::max(det_err, std::abs(integrate_monodromy(v, z).det() - 1.0));
  }

  double mult_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto [rp, rm] = hill::multipliers(random_disk(rng, 20.0));
    mult_err = std::max(mult_err, std::abs(rp * rm - 1.0));
  }

  double scaling_err = 0.0;
  for (int n : {3, 4})
    for (int i = 0; i < 20; ++i) {
      const cdouble z = random_disk(rng, 1.0);
      const auto rho = hill::multipliers(discriminant(gasymov1, z)).rho_plus;
      scaling_err = std::max(
          scaling_err, scaled_err(discriminant(scale(gasymov1, n), double(n * n) * z),
                                  std::pow(rho, n) + std::pow(rho, -n)));
    }

  double shift_err = 0.0, conj_err = 0.0;
  const auto v = make({{1, 0.7}, {-1, 0.2 * I}});
  for (int i = 0; i < 20; ++i) {
    const cdouble c = random_disk(rng, 1.0), z = random_disk(rng, 1.0);
    shift_err =
        std::max(shift_err, scaled_err(discriminant(shift(v, c), z), discriminant(v, z - c)));
    conj_err = std::max(conj_err, scaled_err(discriminant(conjugate(v), std::conj(z)),
                                             std::conj(discriminant(v, z))));
  }

  double fd_err = 0.0;
  const double h = 1e-5;
  for (double re : {-1.0, 0.0, 1.0, 2.0, 3.0})
    for (double im : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const cdouble z{re, im};
      const cdouble fd = (discriminant(mathieu, z + h) - discriminant(mathieu, z - h)) / (2 * h);
      fd_err = std::max(fd_err, std::abs(hill::discriminant_derivative(mathieu, z) - fd));
    }

  const bool ok = det_err <= 1e-10 && mult_err <= 1e-14 && scaling_err <= 1e-8 &&
                  shift_err <= 1e-9 && conj_err <= 1e-9 && fd_err <= 1e-6;
  criterion(8, "property suites", ok,
            "det " + sci(det_err) + ", multiplier product " + sci(mult_err) + ", scaling " +
                sci(scaling_err) + ", shift " + sci(shift_err) + ", conjugation " +
                sci(conj_err) + ", derivative vs FD " + sci(fd_err));
}

void c9_cross_path() {
  double worst = 0.0;
  const FourierPotential two_mode = make({{1, 0.3}, {2, 0.2 * I}});
  for (const auto* v : {&gasymov1, &two_mode}) {
    for (int n : {3, 4, 5}) {
      const cdouble series = hill::picard_discriminant(*v, n, PicardConfig{});
      const cdouble ode = discriminant(scale(*v, n), cdouble{1.0, 0.0});
      worst = std::max(worst, std::abs(series - ode));
    }
  }
  criterion(9, "cross-path equivalence series vs integrator", worst <= 1e-8,
            "max |difference| " + sci(worst) + " <= 1e-08");
}

}  // namespace

int main() {
  c1_free_identity();
  c2_gasymov_identity();
  c3_point_identities();
  c4_picard_path();
  c5_vanishing_integrals();
  c6_homotopy();
  c7_mathieu_bands();
  c8_property_suites();
  c9_cross_path();
  if (g_failures == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
