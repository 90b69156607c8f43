#include "hill/potential.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "hill/errors.hpp"
#include "json.hpp"

namespace hill {

namespace {

bool nonzero(cdouble c) { return c.real() != 0.0 || c.imag() != 0.0; }

}  // namespace

FourierPotential::FourierPotential(coeff_map coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag()))
      throw InvalidArgument("potential coefficient at mode " + std::to_string(it->first) +
                            " is not finite");
    it = nonzero(it->second) ? std::next(it) : coeffs_.erase(it);
  }
}

cdouble FourierPotential::coeff(std::int64_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cdouble{0.0, 0.0} : it->second;
}

bool FourierPotential::is_gasymov_class() const noexcept {
  return coeffs_.empty() || coeffs_.begin()->first >= 1;
}

bool FourierPotential::is_real() const noexcept {
  for (const auto& [k, a] : coeffs_) {
    if (coeff(-k) != std::conj(a)) return false;
  }
  return true;
}

cdouble FourierPotential::evaluate(double x) const {
  cdouble sum{0.0, 0.0};
  for (const auto& [k, a] : coeffs_)
    sum += a * std::exp(cdouble{0.0, static_cast<double>(k) * x});
  return sum;
}

FourierPotential scale(const FourierPotential& v, std::int64_t n) {
  if (n < 1) throw InvalidArgument("scale: n must be a positive integer, got " + std::to_string(n));
  FourierPotential::coeff_map out;
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  for (const auto& [k, a] : v.coeffs()) out.emplace(k * n, n2 * a);
  return FourierPotential(std::move(out));
}

FourierPotential shift(const FourierPotential& v, cdouble c) {
  FourierPotential::coeff_map out = v.coeffs();
  out[0] += c;
  return FourierPotential(std::move(out));
}

FourierPotential conjugate(const FourierPotential& v) {
  FourierPotential::coeff_map out;
  for (const auto& [k, a] : v.coeffs()) out.emplace(-k, std::conj(a));
  return FourierPotential(std::move(out));
}

FourierPotential homotopy_member(const FourierPotential& v, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw InvalidArgument("homotopy_member: eps must lie in [0,1]");
  FourierPotential::coeff_map out;
  for (const auto& [k, a] : v.coeffs()) out.emplace(k, eps * a);
  return FourierPotential(std::move(out));
}

namespace {

double require_finite_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError(std::string("potential file: coefficient entry needs numeric \"") + key +
                     "\"");
  const double v = j[key].get<double>();
  if (!std::isfinite(v))
    throw ParseError(std::string("potential file: non-finite \"") + key + "\"");
  return v;
}

}  // namespace

PotentialFile parse_potential(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("potential file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw ParseError("potential file: expected an object with a \"coeffs\" array");

  PotentialFile out;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("potential file: \"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }

  FourierPotential::coeff_map coeffs;
  for (const auto& entry : doc["coeffs"]) {
    if (!entry.is_object() || !entry.contains("k"))
      throw ParseError("potential file: each coefficient entry needs an integer \"k\"");
    const auto& kj = entry["k"];
    std::int64_t k = 0;
    if (kj.is_number_integer()) {
      k = kj.get<std::int64_t>();
    } else if (kj.is_number_float()) {
      const double kd = kj.get<double>();
      if (kd != std::floor(kd) || !std::isfinite(kd))
        throw ParseError("potential file: mode \"k\" must be an integer");
      k = static_cast<std::int64_t>(kd);
    } else {
      throw ParseError("potential file: mode \"k\" must be an integer");
    }
    const double re = require_finite_number(entry, "re");
    const double im = require_finite_number(entry, "im");
    if (coeffs.count(k))
      throw ParseError("potential file: duplicate mode k=" + std::to_string(k));
    coeffs.emplace(k, cdouble{re, im});
  }
  out.potential = FourierPotential(std::move(coeffs));
  return out;
}

PotentialFile load_potential(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open potential file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_potential(buf.str());
}

}  // namespace hill
