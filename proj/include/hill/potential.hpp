#ifndef HILL_POTENTIAL_HPP
#define HILL_POTENTIAL_HPP

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace hill {

using cdouble = std::complex<double>;

/// A finite complex trigonometric polynomial V(x) = sum_k a_k e^{ikx} of
/// period 2pi, stored as a sparse mode -> coefficient map.  Canonical form:
/// exact-zero coefficients are never stored, so operator== is structural
/// equality.  Immutable once constructed.
class FourierPotential {
 public:
  using coeff_map = std::map<std::int64_t, cdouble>;

  FourierPotential() = default;  // the zero potential
  explicit FourierPotential(coeff_map coeffs);

  const coeff_map& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t mode_count() const noexcept { return coeffs_.size(); }

  /// Coefficient at mode k; zero when absent.
  cdouble coeff(std::int64_t k) const;

  /// True iff every stored mode k satisfies k >= 1 (vacuously true for the
  /// zero potential).
  bool is_gasymov_class() const noexcept;

  /// True iff V(x) is real for all real x, i.e. a_{-k} = conj(a_k).
  bool is_real() const noexcept;

  /// Pointwise value sum_k a_k e^{ikx}.
  cdouble evaluate(double x) const;

  bool operator==(const FourierPotential&) const = default;

 private:
  coeff_map coeffs_;
};

/// q_n(x) = n^2 V(nx): coefficient n^2 a_k moves to mode k*n.  Requires n >= 1.
FourierPotential scale(const FourierPotential& v, std::int64_t n);

/// Adds the constant c to the mode-0 coefficient.
FourierPotential shift(const FourierPotential& v, cdouble c);

/// Pointwise complex conjugate: mode k -> -k with coefficient conj(a_k).
FourierPotential conjugate(const FourierPotential& v);

/// eps*V for eps in [0,1]; eps = 0 yields the zero potential.
FourierPotential homotopy_member(const FourierPotential& v, double eps);

struct PotentialFile {
  FourierPotential potential;
  std::string label;  // optional "label" key, empty when absent
};

/// Parses the JSON potential document {"coeffs":[{"k":..,"re":..,"im":..},...]}.
/// Throws ParseError on malformed documents, non-integer modes, non-finite
/// coefficients, or duplicate modes.
PotentialFile parse_potential(const std::string& json_text);

/// Reads and parses a potential file from disk.
PotentialFile load_potential(const std::filesystem::path& path);

}  // namespace hill

#endif
