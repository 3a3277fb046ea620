#pragma once

// Binomial Gröbner bases.
//
// There is no general polynomial type: S-pairs of pure-difference binomials
// are pure-difference binomials, and reducing one side of a binomial by
// another binomial keeps it a binomial. Coefficients are therefore implicit
// (+1 on the lead, -1 on the trail).

#include <cstddef>
#include <optional>
#include <vector>

#include "sgalg/monomial.hpp"

namespace sgalg {

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(TermOrder order, std::vector<Binomial> elements, bool reduced);

  const TermOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }

  // Index of an element whose lead divides m, or nullopt when m is standard.
  std::optional<std::size_t> find_reducer(const Monomial& m) const;

  // Deterministic division: repeatedly replace the first dividing lead by
  // its trail. For a Gröbner basis this is the unique standard monomial
  // congruent to m.
  Monomial normal_form(const Monomial& m) const;

  // Reduce both sides; nullopt means the binomial reduces to zero.
  std::optional<Binomial> normal_form(const Binomial& b) const;

  // Does a - b lie in the ideal? Exact only when this is a Gröbner basis.
  bool contains(const Monomial& a, const Monomial& b) const;
  bool contains(const Binomial& b) const { return contains(b.lead, b.trail); }

  // The leads, which minimally generate the initial ideal when reduced.
  std::vector<Monomial> initial_ideal() const;

 private:
  TermOrder order_;
  std::vector<Binomial> elements_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::int64_t> weights_;
  bool reduced_ = false;
};

struct BuchbergerOptions {
  // Variables x_i with I : x_i^oo = I. Common factors in these variables
  // are divided out of every new S-binomial.
  std::vector<bool> saturated;

  static BuchbergerOptions all_saturated(std::size_t num_variables) {
    return {std::vector<bool>(num_variables, true)};
  }
};

// Reduced Gröbner basis of the ideal generated by `generators` (each one
// re-oriented under `order`). Normal pair selection by lambda-degree of the
// lcm, the coprime-lead criterion and the Gebauer-Möller update.
GroebnerBasis buchberger(const std::vector<Binomial>& generators, const TermOrder& order,
                         const BuchbergerOptions& options = {});

// Greedy minimal generating subset: in increasing (lambda-degree, lead
// exponents, trail exponents) order, keep a binomial only if it is not in
// the ideal of those kept before it.
std::vector<Binomial> minimalize(const std::vector<Binomial>& generators,
                                 const TermOrder& order);

// Generators of I ∩ k[other variables]: the elements of the reduced basis
// under the elimination order for `block` that avoid the block entirely.
std::vector<Binomial> eliminate(const std::vector<Binomial>& generators,
                                const TermOrder& order,
                                const std::vector<std::size_t>& block,
                                const BuchbergerOptions& options = {});

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

}  // namespace sgalg
