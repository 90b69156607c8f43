#include "hill/cli.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "hill/errors.hpp"
#include "hill/monodromy.hpp"
#include "hill/parallel.hpp"
#include "hill/picard.hpp"
#include "hill/potential.hpp"
#include "hill/spectrum.hpp"

namespace hill::cli {

namespace {

constexpr const char* k_program = "hillspec";
constexpr const char* k_version = "0.1.0";

// Shortest round-trip decimal form, identical to the JSON serialization.
std::string g17(double v) { return nlohmann::json(v).dump(); }

using MetaPairs = std::vector<std::pair<std::string, std::string>>;

std::string csv_meta(const std::string& subcommand, const MetaPairs& pairs) {
  std::string line = "# meta program=";
  line += k_program;
  line += " version=";
  line += k_version;
  line += " subcommand=" + subcommand;
  for (const auto& [k, v] : pairs) line += " " + k + "=" + v;
  line += "\n";
  return line;
}

nlohmann::json json_meta(const std::string& subcommand, const MetaPairs& pairs) {
  nlohmann::json m;
  m["program"] = k_program;
  m["version"] = k_version;
  m["subcommand"] = subcommand;
  for (const auto& [k, v] : pairs) m[k] = v;
  return m;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file for writing: " + path);
  out << content;
  if (!out) throw Error("failed writing output file: " + path);
}

struct CommonOpts {
  std::string potential_path;
  std::string output = "-";
  std::string format;  // per-subcommand default when empty
  IntegratorConfig icfg;
};

void add_potential_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--potential", o.potential_path, "Potential JSON file")
      ->required()
      ->check(CLI::ExistingFile);
}

void add_output_flags(CLI::App* cmd, CommonOpts& o, const std::string& default_format,
                      bool allow_csv = true) {
  cmd->add_option("-o,--output", o.output, "Output path ('-' = stdout)")
      ->capture_default_str();
  auto* opt = cmd->add_option("--format", o.format,
                              "Output format (default: " + default_format + ")");
  if (allow_csv)
    opt->check(CLI::IsMember({"csv", "json"}));
  else
    opt->check(CLI::IsMember({"json"}));
}

void add_integrator_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--rtol", o.icfg.rtol, "Integrator relative tolerance")->capture_default_str();
  cmd->add_option("--atol", o.icfg.atol, "Integrator absolute tolerance")->capture_default_str();
  cmd->add_option("--max-steps", o.icfg.max_steps, "Integrator step budget")
      ->capture_default_str();
}

MetaPairs integrator_meta(const CommonOpts& o) {
  return {{"rtol", g17(o.icfg.rtol)},
          {"atol", g17(o.icfg.atol)},
          {"max_steps", std::to_string(o.icfg.max_steps)}};
}

PotentialFile load(const CommonOpts& o) { return load_potential(o.potential_path); }

std::string potential_meta_value(const CommonOpts& o, const PotentialFile& f) {
  return f.label.empty() ? o.potential_path : f.label;
}

double membership_distance(cdouble delta) {
  return std::max(std::abs(delta.imag()), std::max(0.0, std::abs(delta.real()) - 2.0));
}

double edge_code(BandEdgeKind k) {
  switch (k) {
    case BandEdgeKind::delta_plus_two:
      return 2.0;
    case BandEdgeKind::delta_minus_two:
      return -2.0;
    case BandEdgeKind::window:
      return 0.0;
  }
  return 0.0;
}

const char* termination_name(ArcTermination t) {
  switch (t) {
    case ArcTermination::band_edge:
      return "band-edge";
    case ArcTermination::max_steps:
      return "max-steps";
    case ArcTermination::box_exit:
      return "box-exit";
    case ArcTermination::branch_point:
      return "branch-point";
  }
  return "unknown";
}

std::string grid_csv(const std::string& meta_line,
                     const std::vector<std::array<double, 5>>& rows) {
  std::string out = meta_line;
  out += "re_z,im_z,re_delta,im_delta,dist\n";
  for (const auto& r : rows) {
    out += g17(r[0]);
    for (int i = 1; i < 5; ++i) out += "," + g17(r[i]);
    out += "\n";
  }
  return out;
}

// --------------------------------------------------------------------------
// Subcommand handlers

int run_disc(const CommonOpts& o, const std::string& z_text) {
  const PotentialFile pf = load(o);
  const cdouble z = parse_complex(z_text);
  const DiscriminantJet jet = discriminant_jet(pf.potential, z, o.icfg);
  const MultiplierPair rho = multipliers(jet.delta);
  const double dist = membership_distance(jet.delta);

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("z", z_text);

  if (o.format == "csv") {
    write_output(o.output,
                 grid_csv(csv_meta("disc", meta),
                          {{z.real(), z.imag(), jet.delta.real(), jet.delta.imag(), dist}}));
    return 0;
  }
  nlohmann::json j;
  j["meta"] = json_meta("disc", meta);
  j["z_re"] = z.real();
  j["z_im"] = z.imag();
  j["delta_re"] = jet.delta.real();
  j["delta_im"] = jet.delta.imag();
  j["ddelta_dz_re"] = jet.delta_dz.real();
  j["ddelta_dz_im"] = jet.delta_dz.imag();
  j["rho_plus_re"] = rho.rho_plus.real();
  j["rho_plus_im"] = rho.rho_plus.imag();
  j["rho_minus_re"] = rho.rho_minus.real();
  j["rho_minus_im"] = rho.rho_minus.imag();
  j["dist"] = dist;
  write_output(o.output, j.dump(2) + "\n");
  return 0;
}

std::vector<double> grid_axis(double lo, double hi, double step) {
  if (!(step > 0.0)) throw InvalidArgument("grid: step must be positive");
  if (!(lo <= hi)) throw InvalidArgument("grid: bounds must be ordered");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

int run_grid(const CommonOpts& o, const GridSpec& spec) {
  const PotentialFile pf = load(o);

  const std::vector<double> res = grid_axis(spec.re_min, spec.re_max, spec.re_step);
  const std::vector<double> ims = grid_axis(spec.im_min, spec.im_max, spec.im_step);

  std::vector<std::array<double, 5>> rows(res.size() * ims.size());
  parallel_for(rows.size(), [&](std::size_t idx) {
    const cdouble z{res[idx / ims.size()], ims[idx % ims.size()]};
    const cdouble d = discriminant(pf.potential, z, o.icfg);
    rows[idx] = {z.real(), z.imag(), d.real(), d.imag(), membership_distance(d)};
  });

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("re_grid", g17(spec.re_min) + ":" + g17(spec.re_step) + ":" + g17(spec.re_max));
  meta.emplace_back("im_grid", g17(spec.im_min) + ":" + g17(spec.im_step) + ":" + g17(spec.im_max));

  if (o.format == "json") {
    nlohmann::json j;
    j["meta"] = json_meta("grid", meta);
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& r : rows)
      pts.push_back({{"re_z", r[0]}, {"im_z", r[1]}, {"re_delta", r[2]}, {"im_delta", r[3]},
                     {"dist", r[4]}});
    write_output(o.output, j.dump(2) + "\n");
  } else {
    write_output(o.output, grid_csv(csv_meta("grid", meta), rows));
  }
  return 0;
}

int run_verify_gasymov(const CommonOpts& o, const GridSpec& spec, double tol,
                       const std::string& points_csv) {
  const PotentialFile pf = load(o);
  const GasymovReport report = verify_gasymov(pf.potential, spec, tol, o.icfg);

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("tol", g17(tol));

  nlohmann::json j;
  j["meta"] = json_meta("verify-gasymov", meta);
  j["pass"] = report.pass;
  j["tol"] = report.tol;
  j["max_deviation"] = report.max_deviation;
  j["argmax_re"] = report.argmax_z.real();
  j["argmax_im"] = report.argmax_z.imag();
  j["points_checked"] = report.points.size();
  write_output(o.output, j.dump(2) + "\n");

  if (!points_csv.empty()) {
    std::vector<std::array<double, 5>> rows;
    rows.reserve(report.points.size());
    for (const auto& p : report.points)
      rows.push_back({p.z.real(), p.z.imag(), p.delta.real(), p.delta.imag(), p.deviation});
    write_output(points_csv, grid_csv(csv_meta("verify-gasymov", meta), rows));
  }
  return report.pass ? 0 : 1;
}

int run_bands(const CommonOpts& o, double zmin, double zmax, BandScanConfig cfg) {
  const PotentialFile pf = load(o);
  cfg.integrator = o.icfg;
  const BandScanResult result = band_edges_real(pf.potential, zmin, zmax, cfg);
  for (const auto& w : result.warnings) std::cerr << k_program << ": warning: " << w << "\n";

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("window", g17(zmin) + ":" + g17(zmax));
  meta.emplace_back("scan_step", g17(cfg.scan_step));

  if (o.format == "json") {
    nlohmann::json j;
    j["meta"] = json_meta("bands", meta);
    auto& bands = j["bands"] = nlohmann::json::array();
    for (const auto& b : result.bands)
      bands.push_back({{"lo", b.lo},
                       {"hi", b.hi},
                       {"edge_lo", edge_code(b.lo_kind)},
                       {"edge_hi", edge_code(b.hi_kind)}});
    j["possible_tangencies"] = result.possible_tangencies;
    j["warnings"] = result.warnings;
    write_output(o.output, j.dump(2) + "\n");
  } else {
    std::string out = csv_meta("bands", meta);
    out += "lo,hi,edge_lo,edge_hi\n";
    for (const auto& b : result.bands)
      out += g17(b.lo) + "," + g17(b.hi) + "," + g17(edge_code(b.lo_kind)) + "," +
             g17(edge_code(b.hi_kind)) + "\n";
    write_output(o.output, out);
  }
  return 0;
}

int run_arcs(const CommonOpts& o, const std::string& seed_text, ArcConfig cfg) {
  const PotentialFile pf = load(o);
  cfg.integrator = o.icfg;
  const cdouble seed = parse_complex(seed_text);
  const SpectralArc arc = trace_arc(pf.potential, seed, cfg);

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("seed", seed_text);
  meta.emplace_back("direction", std::to_string(cfg.direction));

  if (o.format == "json") {
    nlohmann::json j;
    j["meta"] = json_meta("arcs", meta);
    j["termination"] = termination_name(arc.termination);
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& z : arc.points) pts.push_back({{"re_z", z.real()}, {"im_z", z.imag()}});
    write_output(o.output, j.dump(2) + "\n");
  } else {
    std::string out = csv_meta("arcs", meta);
    out += "idx,re_z,im_z,re_delta\n";
    for (std::size_t i = 0; i < arc.points.size(); ++i) {
      const cdouble d = discriminant(pf.potential, arc.points[i], o.icfg);
      out += std::to_string(i) + "," + g17(arc.points[i].real()) + "," +
             g17(arc.points[i].imag()) + "," + g17(d.real()) + "\n";
    }
    out += "# termination " + std::string(termination_name(arc.termination)) + "\n";
    write_output(o.output, out);
  }
  return 0;
}

int run_picard(const CommonOpts& o, int n, const PicardConfig& cfg, double tol,
               std::int64_t check_k) {
  const PotentialFile pf = load(o);

  PicardDiagnostics diag;
  try {
    diag = picard_diagnostics(pf.potential, n, cfg);
  } catch (const ZeroExponentError& e) {
    std::cerr << k_program << ": picard: " << e.what() << "\n";
    return 1;
  }

  MetaPairs meta{{"potential", potential_meta_value(o, pf)},
                 {"n", std::to_string(n)},
                 {"depth", std::to_string(cfg.depth)},
                 {"harmonics", std::to_string(cfg.harmonics)},
                 {"tol", g17(tol)}};

  auto seed_report = [](const PicardSum& s) {
    nlohmann::json r;
    r["iterate_sup_norms"] = s.iterate_norms;
    r["last_iterate_norm"] = s.last_iterate_norm;
    r["min_exponent"] = s.sum.min_exponent();
    r["max_exponent"] = s.sum.max_exponent();
    return r;
  };

  double max_vanishing = 0.0;
  nlohmann::json checks = nlohmann::json::array();
  const std::pair<const char*, const PicardSum*> seeds[2] = {{"cos", &diag.cosine},
                                                             {"sin", &diag.sine}};
  for (const auto& [name, sum] : seeds) {
    for (std::size_t j = 0; j < sum->iterates.size(); ++j) {
      for (std::int64_t k = 1; k <= check_k; ++k) {
        const cdouble val = vanishing_integral(sum->iterates[j], k, n);
        max_vanishing = std::max(max_vanishing, std::abs(val));
        checks.push_back({{"seed", name},
                          {"j", j},
                          {"k", k},
                          {"re", val.real()},
                          {"im", val.imag()}});
      }
    }
  }

  const bool pass = std::abs(diag.delta - 2.0) <= tol && max_vanishing == 0.0;

  nlohmann::json j;
  j["meta"] = json_meta("picard", meta);
  j["delta_re"] = diag.delta.real();
  j["delta_im"] = diag.delta.imag();
  j["cos"] = seed_report(diag.cosine);
  j["sin"] = seed_report(diag.sine);
  j["vanishing_integrals"] = std::move(checks);
  j["max_vanishing_abs"] = max_vanishing;
  j["pass"] = pass;
  write_output(o.output, j.dump(2) + "\n");
  return pass ? 0 : 1;
}

int run_homotopy(const CommonOpts& o, int n, int steps, double tol) {
  const PotentialFile pf = load(o);
  const HomotopyReport report = homotopy_scan(pf.potential, n, steps, tol, o.icfg);

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("n", std::to_string(n));
  meta.emplace_back("steps", std::to_string(steps));
  meta.emplace_back("tol", g17(tol));

  nlohmann::json j;
  j["meta"] = json_meta("homotopy", meta);
  j["target_re"] = report.target.real();
  j["target_im"] = report.target.imag();
  j["max_deviation"] = report.max_deviation;
  j["pass"] = report.pass;
  j["eps"] = report.eps;
  auto& ds = j["delta"] = nlohmann::json::array();
  for (const auto& d : report.delta) ds.push_back({{"re", d.real()}, {"im", d.imag()}});
  write_output(o.output, j.dump(2) + "\n");
  return report.pass ? 0 : 1;
}

int run_eigs(const CommonOpts& o, int count, EigenvalueConfig cfg) {
  const PotentialFile pf = load(o);
  cfg.integrator = o.icfg;
  const EigenvalueResult result = periodic_eigenvalues(pf.potential, count, cfg);
  for (const auto& w : result.warnings) std::cerr << k_program << ": warning: " << w << "\n";

  MetaPairs meta = integrator_meta(o);
  meta.emplace_back("potential", potential_meta_value(o, pf));
  meta.emplace_back("count", std::to_string(count));

  nlohmann::json j;
  j["meta"] = json_meta("eigs", meta);
  auto& vals = j["values"] = nlohmann::json::array();
  for (const auto& z : result.values) {
    const cdouble d = discriminant(pf.potential, z, o.icfg);
    vals.push_back(
        {{"re", z.real()}, {"im", z.imag()}, {"delta_re", d.real()}, {"delta_im", d.imag()}});
  }
  j["warnings"] = result.warnings;
  write_output(o.output, j.dump(2) + "\n");
  return 0;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty complex literal");

  // bare imaginary unit forms
  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};

  const char* p = s.c_str();
  char* end = nullptr;
  const double first = std::strtod(p, &end);
  if (end == p) throw ParseError("bad complex literal: " + text);
  if (*end == '\0') return {first, 0.0};
  if (*end == 'i' && end[1] == '\0') return {0.0, first};

  // a+bi / a-bi, allowing "a+i" and "a-i"
  double second;
  if ((end[0] == '+' || end[0] == '-') && end[1] == 'i' && end[2] == '\0') {
    second = end[0] == '+' ? 1.0 : -1.0;
    return {first, second};
  }
  const char* q = end;
  second = std::strtod(q, &end);
  if (end == q || *end != 'i' || end[1] != '\0')
    throw ParseError("bad complex literal: " + text);
  return {first, second};
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back(k_program);
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Floquet toolkit for 1-D Hill operators with trigonometric-polynomial potentials",
               k_program};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(k_version));

  // disc
  CommonOpts disc_o;
  std::string disc_z;
  auto* disc = app.add_subcommand("disc", "Discriminant, derivative and multipliers at one z");
  add_potential_flag(disc, disc_o);
  disc->add_option("--z", disc_z, "Spectral parameter, e.g. 0.25+0i")->required();
  add_output_flags(disc, disc_o, "json");
  add_integrator_flags(disc, disc_o);

  // grid
  CommonOpts grid_o;
  GridSpec grid_spec{-2.0, 9.0, 0.5, -2.0, 2.0, 0.5};
  auto* grid = app.add_subcommand("grid", "Discriminant over a rectangular z grid");
  add_potential_flag(grid, grid_o);
  grid->add_option("--re-min", grid_spec.re_min)->capture_default_str();
  grid->add_option("--re-max", grid_spec.re_max)->capture_default_str();
  grid->add_option("--re-step", grid_spec.re_step)->capture_default_str();
  grid->add_option("--im-min", grid_spec.im_min)->capture_default_str();
  grid->add_option("--im-max", grid_spec.im_max)->capture_default_str();
  grid->add_option("--im-step", grid_spec.im_step)->capture_default_str();
  add_output_flags(grid, grid_o, "csv");
  add_integrator_flags(grid, grid_o);

  // verify-gasymov
  CommonOpts vg_o;
  GridSpec vg_spec{-2.0, 9.0, 0.5, -2.0, 2.0, 0.5};
  double vg_tol = 1e-7;
  std::string vg_points_csv;
  auto* vg = app.add_subcommand("verify-gasymov",
                                "Check Delta(V;z) = 2cos(2pi sqrt z) on a grid");
  add_potential_flag(vg, vg_o);
  vg->add_option("--tol", vg_tol, "Max allowed deviation")->capture_default_str();
  vg->add_option("--re-min", vg_spec.re_min)->capture_default_str();
  vg->add_option("--re-max", vg_spec.re_max)->capture_default_str();
  vg->add_option("--re-step", vg_spec.re_step)->capture_default_str();
  vg->add_option("--im-min", vg_spec.im_min)->capture_default_str();
  vg->add_option("--im-max", vg_spec.im_max)->capture_default_str();
  vg->add_option("--im-step", vg_spec.im_step)->capture_default_str();
  vg->add_option("--points-csv", vg_points_csv, "Also dump per-point CSV here");
  add_output_flags(vg, vg_o, "json", /*allow_csv=*/false);
  add_integrator_flags(vg, vg_o);

  // bands
  CommonOpts bands_o;
  double bands_zmin = -2.0, bands_zmax = 6.0;
  BandScanConfig bands_cfg;
  auto* bands = app.add_subcommand("bands", "Real-axis band intervals for a real potential");
  add_potential_flag(bands, bands_o);
  bands->add_option("--zmin", bands_zmin)->capture_default_str();
  bands->add_option("--zmax", bands_zmax)->capture_default_str();
  bands->add_option("--scan-step", bands_cfg.scan_step)->capture_default_str();
  bands->add_option("--root-tol", bands_cfg.root_tol)->capture_default_str();
  add_output_flags(bands, bands_o, "csv");
  add_integrator_flags(bands, bands_o);

  // arcs
  CommonOpts arcs_o;
  std::string arcs_seed;
  ArcConfig arcs_cfg;
  auto* arcs = app.add_subcommand("arcs", "Trace a spectral arc from a seed point");
  add_potential_flag(arcs, arcs_o);
  arcs->add_option("--seed", arcs_seed, "Seed z on the spectrum, e.g. 1+0i")->required();
  arcs->add_option("--direction", arcs_cfg.direction, "+1 or -1")->capture_default_str();
  arcs->add_option("--step", arcs_cfg.initial_step, "Initial arc step")->capture_default_str();
  arcs->add_option("--arc-tol", arcs_cfg.arc_tol)->capture_default_str();
  arcs->add_option("--arc-max-steps", arcs_cfg.max_steps)->capture_default_str();
  arcs->add_option("--box-re-min", arcs_cfg.box_re_min)->capture_default_str();
  arcs->add_option("--box-re-max", arcs_cfg.box_re_max)->capture_default_str();
  arcs->add_option("--box-im-min", arcs_cfg.box_im_min)->capture_default_str();
  arcs->add_option("--box-im-max", arcs_cfg.box_im_max)->capture_default_str();
  add_output_flags(arcs, arcs_o, "csv");
  add_integrator_flags(arcs, arcs_o);

  // picard
  CommonOpts pic_o;
  int pic_n = 3;
  PicardConfig pic_cfg;
  double pic_tol = 1e-8;
  std::int64_t pic_check_k = 5;
  auto* pic = app.add_subcommand("picard",
                                 "Integration-free discriminant of q_n at w=1 via the "
                                 "exponential-series recursion");
  add_potential_flag(pic, pic_o);
  pic->add_option("--n", pic_n, "Scaling index (>= 3)")->capture_default_str();
  pic->add_option("--depth", pic_cfg.depth, "Iterates summed")->capture_default_str();
  pic->add_option("--harmonics", pic_cfg.harmonics, "Harmonic cutoff L")->capture_default_str();
  pic->add_option("--drop-tol", pic_cfg.drop_tol, "Coefficient drop tolerance")
      ->capture_default_str();
  pic->add_option("--tol", pic_tol, "Pass threshold on |Delta - 2|")->capture_default_str();
  pic->add_option("--check-k", pic_check_k, "Vanishing integrals checked for k = 1..K")
      ->capture_default_str();
  add_output_flags(pic, pic_o, "json", /*allow_csv=*/false);

  // homotopy
  CommonOpts hom_o;
  int hom_n = 3, hom_steps = 11;
  double hom_tol = 1e-8;
  auto* hom = app.add_subcommand("homotopy", "Constancy of Delta(eps V; 1/n^2) over eps in [0,1]");
  add_potential_flag(hom, hom_o);
  hom->add_option("--n", hom_n, "Scaling index (>= 3)")->capture_default_str();
  hom->add_option("--steps", hom_steps, "Number of eps samples")->capture_default_str();
  hom->add_option("--tol", hom_tol, "Pass threshold")->capture_default_str();
  add_output_flags(hom, hom_o, "json", /*allow_csv=*/false);
  add_integrator_flags(hom, hom_o);

  // eigs
  CommonOpts eig_o;
  int eig_count = 4;
  EigenvalueConfig eig_cfg;
  auto* eig = app.add_subcommand("eigs", "Periodic eigenvalues by Newton from seeds n^2");
  add_potential_flag(eig, eig_o);
  eig->add_option("--count", eig_count, "Number of seeds n = 0..count-1")->capture_default_str();
  eig->add_option("--root-tol", eig_cfg.root_tol)->capture_default_str();
  add_output_flags(eig, eig_o, "json", /*allow_csv=*/false);
  add_integrator_flags(eig, eig_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(disc)) return run_disc(disc_o, disc_z);
    if (app.got_subcommand(grid)) return run_grid(grid_o, grid_spec);
    if (app.got_subcommand(vg)) return run_verify_gasymov(vg_o, vg_spec, vg_tol, vg_points_csv);
    if (app.got_subcommand(bands)) return run_bands(bands_o, bands_zmin, bands_zmax, bands_cfg);
    if (app.got_subcommand(arcs)) return run_arcs(arcs_o, arcs_seed, arcs_cfg);
    if (app.got_subcommand(pic)) return run_picard(pic_o, pic_n, pic_cfg, pic_tol, pic_check_k);
    if (app.got_subcommand(hom)) return run_homotopy(hom_o, hom_n, hom_steps, hom_tol);
    if (app.got_subcommand(eig)) return run_eigs(eig_o, eig_count, eig_cfg);
  } catch (const std::exception& e) {
    std::cerr << k_program << ": error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << k_program << ": no subcommand\n";
  return 2;
}

}  // namespace hill::cli
