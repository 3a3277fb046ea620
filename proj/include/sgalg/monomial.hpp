#pragma once

// Monomials, the A-graded reverse-lexicographic term order and
// pure-difference binomials.
//
// Variables are laid out in a fixed sequence per semigroup context: the
// Z-block (generators in B) first, then the Y-block (generators in E). The
// reverse-lexicographic tie-break treats the last variable as the cheapest,
// so Y-variables are always smaller than Z-variables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgalg/linalg.hpp"

namespace sgalg {

class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_variables) : exps_(num_variables, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t num_variables, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const;
  std::int64_t total_degree() const;
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // this / other; other must divide this.
  Monomial operator/(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Lexicographic on exponent vectors; a storage order, not a term order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Exact 64-bit helpers; throw Error(Overflow) instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Integer& x);

// The A-graded reverse-lexicographic order.
//
// Comparison of m1 and m2, in stages:
//   0. (elimination mode only) total exponent on the eliminated variables;
//   1. lambda . (deg m1 - deg m2), lambda the strictly positive functional;
//   2. the leftmost nonzero entry of deg m1 - deg m2 (positive means m1 is
//      larger);
//   3. reverse lexicographic: m1 > m2 iff the last nonzero entry of
//      m1 - m2, read along the variable ranking, is negative.
// Stage 1 makes the order global for every pointed input; stages 1-2 never
// separate the two sides of an A-homogeneous binomial, so on toric ideals the
// order acts through the revlex tie-break alone.
class TermOrder {
 public:
  TermOrder() = default;

  // degrees[i] is the A-degree of variable i; lambda_scaled[k] are the
  // coordinates of lambda times a positive common denominator.
  TermOrder(std::vector<std::vector<std::int64_t>> degrees,
            std::vector<std::int64_t> lambda_scaled, std::int64_t lambda_denominator);

  static TermOrder from_matrix(const IntegerMatrix& columns_in_layout,
                               const RationalVector& lambda);

  std::size_t num_variables() const { return degrees_.size(); }
  std::size_t dimension() const { return dimension_; }

  // Same order with variable `var` moved to the cheapest revlex position.
  TermOrder with_cheapest(std::size_t var) const;
  // Same order, with the listed variables compared first by total exponent.
  TermOrder eliminating(std::vector<std::size_t> vars) const;
  // Same order, with stage 3 preceded by integer weight rows (larger dot
  // product wins, first row first). Used to replay a given matrix order;
  // revlex still breaks any remaining tie.
  TermOrder with_tie_break(std::vector<std::vector<std::int64_t>> rows) const;
  const std::vector<std::vector<std::int64_t>>& tie_break() const { return tie_break_; }
  bool is_elimination() const { return !elim_.empty(); }
  std::span<const std::size_t> eliminated() const { return elim_; }
  std::span<const std::size_t> ranking() const { return ranking_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // lambda-degree scaled by the common denominator (an integer >= 0).
  std::int64_t scaled_weight(const Monomial& m) const;
  std::int64_t weight_denominator() const { return denominator_; }
  Rational lambda_degree(const Monomial& m) const;

  std::vector<std::int64_t> degree(const Monomial& m) const;
  const std::vector<std::int64_t>& variable_degree(std::size_t i) const { return degrees_[i]; }
  std::int64_t variable_weight(std::size_t i) const { return weights_[i]; }

 private:
  std::vector<std::vector<std::int64_t>> degrees_;
  std::vector<std::int64_t> weights_;  // scaled lambda-degree per variable
  std::int64_t denominator_ = 1;
  std::size_t dimension_ = 0;
  std::vector<std::size_t> ranking_;  // most expensive first
  std::vector<std::size_t> elim_;
  std::vector<std::vector<std::int64_t>> tie_break_;
};

// lead - trail, lead > trail under the order it was built with.
struct Binomial {
  Monomial lead;
  Monomial trail;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// The binomial a - b oriented by `order`, or nullopt when a == b.
std::optional<Binomial> make_binomial(const Monomial& a, const Monomial& b,
                                      const TermOrder& order);

// Divide both sides by their gcd restricted to the variables flagged in
// `mask`. Orientation is preserved because the order is multiplicative.
Binomial strip_common_factor(const Binomial& b, const std::vector<bool>& mask);

}  // namespace sgalg
