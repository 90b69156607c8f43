#include "hill/exp_series.hpp"

#include <cmath>
#include <utility>

#include "hill/errors.hpp"

namespace hill {

namespace {
bool nonzero(cdouble c) { return c.real() != 0.0 || c.imag() != 0.0; }
}  // namespace

ExpSeries::ExpSeries(term_map terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = nonzero(it->second) ? std::next(it) : terms_.erase(it);
}

cdouble ExpSeries::coeff(std::int64_t l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? cdouble{0.0, 0.0} : it->second;
}

std::int64_t ExpSeries::min_exponent() const {
  if (terms_.empty()) throw InvalidArgument("min_exponent of zero series");
  return terms_.begin()->first;
}

std::int64_t ExpSeries::max_exponent() const {
  if (terms_.empty()) throw InvalidArgument("max_exponent of zero series");
  return terms_.rbegin()->first;
}

double ExpSeries::sup_norm_bound() const {
  double sum = 0.0;
  for (const auto& [l, b] : terms_) sum += std::abs(b);
  return sum;
}

cdouble ExpSeries::eval(double x) const {
  cdouble sum{0.0, 0.0};
  for (const auto& [l, b] : terms_)
    sum += b * std::exp(cdouble{0.0, static_cast<double>(l) * x});
  return sum;
}

ExpSeries ExpSeries::derivative() const {
  term_map out;
  for (const auto& [l, b] : terms_)
    if (l != 0) out.emplace(l, cdouble{0.0, static_cast<double>(l)} * b);
  return ExpSeries(std::move(out));
}

void ExpSeries::add_term(std::int64_t l, cdouble c) {
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (!nonzero(it->second)) terms_.erase(it);
  } else if (!nonzero(c)) {
    terms_.erase(it);
  }
}

ExpSeries ExpSeries::truncated(std::int64_t max_harmonic, double drop_tol) const {
  term_map out;
  for (const auto& [l, b] : terms_) {
    if (std::llabs(l) > max_harmonic) continue;
    if (std::abs(b) < drop_tol) continue;
    out.emplace(l, b);
  }
  return ExpSeries(std::move(out));
}

ExpSeries& ExpSeries::operator+=(const ExpSeries& other) {
  for (const auto& [l, b] : other.terms_) add_term(l, b);
  return *this;
}

ExpSeries operator-(const ExpSeries& a, const ExpSeries& b) {
  ExpSeries out = a;
  for (const auto& [l, c] : b.terms_) out.add_term(l, -c);
  return out;
}

ExpSeries operator*(cdouble c, const ExpSeries& s) {
  ExpSeries::term_map out;
  if (nonzero(c))
    for (const auto& [l, b] : s.terms()) out.emplace(l, c * b);
  return ExpSeries(std::move(out));
}

}  // namespace hill
