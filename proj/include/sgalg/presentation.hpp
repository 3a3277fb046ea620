#pragma once

// The presentation (M' | N) of k[S] as a module over k[Y], its degreewise
// verification, and the Cohen-Macaulay and regularity diagnostics.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sgalg/semigroup.hpp"

namespace sgalg {

struct PresentationEntry {
  std::size_t row = 0;  // 0-based index into sigma
  int sign = 1;
  Exponents y;  // Y-monomial, length r

  friend bool operator==(const PresentationEntry&, const PresentationEntry&) = default;
};

struct SparseColumn {
  std::vector<PresentationEntry> entries;
  IntegerVector degree;

  friend bool operator==(const SparseColumn& a, const SparseColumn& b) {
    return a.entries == b.entries;
  }
};

struct ModulePresentation {
  std::vector<Exponents> sigma;  // Q in lexicographic order
  std::vector<SparseColumn> m_prime;
  std::vector<SparseColumn> n;
  std::vector<Binomial> se_generators;  // g_1..g_t, Y-variables only

  std::size_t beta0() const { return sigma.size(); }
  std::size_t beta1() const { return m_prime.size() + n.size(); }
  std::size_t row_of(const Exponents& u) const;
};

// Minimal binomial generators of I_{S_E} = I_A ∩ k[Y], in variable layout.
std::vector<Binomial> se_generators(const AffineSemigroup& s);

ModulePresentation build_presentation(const AffineSemigroup& s);

struct VerificationReport {
  bool composition_zero = true;
  std::vector<IntegerVector> composition_failures;  // degrees of bad columns
  std::vector<IntegerVector> exactness_failures;    // degrees with ker != im
  std::size_t degrees_checked = 0;
  Rational bound;

  bool ok() const { return composition_zero && exactness_failures.empty(); }
};

// 3 x the largest lambda-degree among Gröbner leads and elements of Q.
Rational default_verification_bound(const AffineSemigroup& s);

// psi_0 o psi_1 = 0 columnwise, and dim ker(psi_0)_a = dim im(psi_1)_a for
// every degree a with lambda(a) <= bound.
VerificationReport verify_presentation(const AffineSemigroup& s, const ModulePresentation& p,
                                       std::optional<Rational> bound = std::nullopt);

// Number of minimal generators of ker(psi_0) in each degree with lambda <=
// bound, from the columns of p: dim im_a - dim (m_E im)_a.
std::map<IntegerVector, std::size_t> minimal_relation_degrees(const AffineSemigroup& s,
                                                              const ModulePresentation& p,
                                                              const Rational& bound);

bool cm_check(const AffineSemigroup& s);
bool cm_oracle(const AffineSemigroup& s);

struct Regularity {
  std::int64_t module_value = 0;  // max |u| over Q
  std::int64_t ideal_value = 0;   // module_value + 1
};

Regularity regularity(const AffineSemigroup& s);

bool is_block_resolution(const ModulePresentation& p);

}  // namespace sgalg
