#ifndef HILL_EXP_SERIES_HPP
#define HILL_EXP_SERIES_HPP

#include <complex>
#include <cstdint>
#include <map>

#include "hill/potential.hpp"

namespace hill {

/// Finite complex linear combination sum_l b_l e^{ilx} over integer
/// exponents, stored sparsely with no exact-zero coefficients.
class ExpSeries {
 public:
  using term_map = std::map<std::int64_t, cdouble>;

  ExpSeries() = default;
  explicit ExpSeries(term_map terms);

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  cdouble coeff(std::int64_t l) const;

  /// Smallest / largest stored exponent.  Throws InvalidArgument on the zero
  /// series.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// sum_l |b_l| — an upper bound for sup_x |S(x)|.
  double sup_norm_bound() const;

  /// Pointwise value sum_l b_l e^{ilx}.
  cdouble eval(double x) const;

  /// Termwise derivative: b_l -> i*l*b_l.
  ExpSeries derivative() const;

  /// Adds c at exponent l, erasing the slot if it cancels to exact zero.
  void add_term(std::int64_t l, cdouble c);

  /// Drops exponents with |l| > max_harmonic and coefficients with
  /// |b| < drop_tol.
  ExpSeries truncated(std::int64_t max_harmonic, double drop_tol) const;

  ExpSeries& operator+=(const ExpSeries& other);
  friend ExpSeries operator+(ExpSeries a, const ExpSeries& b) { return a += b; }
  friend ExpSeries operator-(const ExpSeries& a, const ExpSeries& b);
  friend ExpSeries operator*(cdouble c, const ExpSeries& s);
  bool operator==(const ExpSeries&) const = default;

 private:
  term_map terms_;
};

}  // namespace hill

#endif
