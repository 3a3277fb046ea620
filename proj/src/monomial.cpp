#include "sgalg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sgalg/error.hpp"

namespace sgalg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "64-bit overflow in degree arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "64-bit overflow in degree arithmetic");
  return r;
}

std::int64_t to_int64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t()))
    throw Error(ErrorCode::Overflow, "integer does not fit in 64 bits");
  return x.get_si();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_)
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t num_variables, std::size_t index, Exponent power) {
  Monomial m(num_variables);
  m.exps_.at(index) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i & 63);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i]))
      throw Error(ErrorCode::Overflow, "exponent overflow in monomial product");
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] - other.exps_[i];
    if (r.exps_[i] < 0)
      throw Error(ErrorCode::InvalidArgument, "monomial quotient by a non-divisor");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder::TermOrder(std::vector<std::vector<std::int64_t>> degrees,
                     std::vector<std::int64_t> lambda_scaled,
                     std::int64_t lambda_denominator)
    : degrees_(std::move(degrees)), denominator_(lambda_denominator) {
  dimension_ = lambda_scaled.size();
  weights_.resize(degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i].size() != dimension_)
      throw Error(ErrorCode::InvalidArgument, "variable degree has wrong dimension");
    std::int64_t w = 0;
    for (std::size_t k = 0; k < dimension_; ++k)
      w = checked_add(w, checked_mul(lambda_scaled[k], degrees_[i][k]));
    if (w <= 0)
      throw Error(ErrorCode::NotPointed, "grading functional is not positive on a variable");
    weights_[i] = w;
  }
  ranking_.resize(degrees_.size());
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
}

TermOrder TermOrder::from_matrix(const IntegerMatrix& columns_in_layout,
                                 const RationalVector& lambda) {
  Integer den = 1;
  for (const auto& q : lambda) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::int64_t> scaled;
  for (const auto& q : lambda) {
    Integer s = q.get_num() * (den / q.get_den());
    scaled.push_back(to_int64(s));
  }
  std::vector<std::vector<std::int64_t>> degrees(columns_in_layout.cols());
  for (std::size_t i = 0; i < columns_in_layout.cols(); ++i)
    for (std::size_t k = 0; k < columns_in_layout.rows(); ++k)
      degrees[i].push_back(to_int64(columns_in_layout(k, i)));
  return TermOrder(std::move(degrees), std::move(scaled), to_int64(den));
}

TermOrder TermOrder::with_cheapest(std::size_t var) const {
  TermOrder o = *this;
  auto it = std::find(o.ranking_.begin(), o.ranking_.end(), var);
  if (it == o.ranking_.end()) throw Error(ErrorCode::InvalidArgument, "no such variable");
  o.ranking_.erase(it);
  o.ranking_.push_back(var);
  o.tie_break_.clear();
  return o;
}

TermOrder TermOrder::eliminating(std::vector<std::size_t> vars) const {
  TermOrder o = *this;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (std::size_t v : vars)
    if (v >= num_variables()) throw Error(ErrorCode::InvalidArgument, "no such variable");
  o.elim_ = std::move(vars);
  return o;
}

TermOrder TermOrder::with_tie_break(std::vector<std::vector<std::int64_t>> rows) const {
  for (const auto& r : rows)
    if (r.size() != num_variables())
      throw Error(ErrorCode::InvalidArgument, "tie-break row has wrong length");
  TermOrder o = *this;
  o.tie_break_ = std::move(rows);
  return o;
}

std::int64_t TermOrder::scaled_weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) w = checked_add(w, checked_mul(weights_[i], m[i]));
  return w;
}

Rational TermOrder::lambda_degree(const Monomial& m) const {
  Rational q(Integer(static_cast<long>(scaled_weight(m))), Integer(static_cast<long>(denominator_)));
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> TermOrder::degree(const Monomial& m) const {
  std::vector<std::int64_t> d(dimension_, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    for (std::size_t k = 0; k < dimension_; ++k)
      d[k] = checked_add(d[k], checked_mul(degrees_[i][k], m[i]));
  }
  return d;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!elim_.empty()) {
    std::int64_t ea = 0, eb = 0;
    for (std::size_t v : elim_) {
      ea += a[v];
      eb += b[v];
    }
    if (ea != eb) return ea <=> eb;
  }
  if (auto c = scaled_weight(a) <=> scaled_weight(b); c != 0) return c;
  for (std::size_t k = 0; k < dimension_; ++k) {
    std::int64_t delta = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      delta = checked_add(delta, checked_mul(degrees_[i][k], std::int64_t{a[i]} - b[i]));
    }
    if (delta != 0) return delta <=> 0;
  }
  for (const auto& row : tie_break_) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) t = checked_add(t, checked_mul(row[i], std::int64_t{a[i]} - b[i]));
    if (t != 0) return t <=> 0;
  }
  for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Binomial

std::optional<Binomial> make_binomial(const Monomial& a, const Monomial& b,
                                      const TermOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{a, b};
  return Binomial{b, a};
}

Binomial strip_common_factor(const Binomial& b, const std::vector<bool>& mask) {
  std::vector<Monomial::Exponent> g(b.lead.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i < mask.size() && mask[i]) {
      g[i] = std::min(b.lead[i], b.trail[i]);
      any = any || g[i] != 0;
    }
  }
  if (!any) return b;
  Monomial gm(std::move(g));
  return Binomial{b.lead / gm, b.trail / gm};
}

}  // namespace sgalg
