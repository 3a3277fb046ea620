#pragma once

// The semigroup context: generators, convex partition, grading functional,
// toric Gröbner basis, membership, standard set Q and Apéry sets.
//
// Generators keep their input indices. Polynomial variables use the layout
// Z_1..Z_s (generators in B, input order) followed by Y_1..Y_r (generators
// in E, input order).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <optional>
#include <vector>

#include "sgalg/groebner.hpp"
#include "sgalg/linalg.hpp"
#include "sgalg/monomial.hpp"

namespace sgalg {

using Exponents = std::vector<Monomial::Exponent>;

struct SemigroupOptions {
  std::size_t q_cap = 1'000'000;
  // Extra weight rows refining the revlex tie-break, indexed by variable
  // layout position. Empty for the standard order.
  std::vector<std::vector<std::int64_t>> tie_break;
};

struct ConvexPartition {
  std::vector<std::size_t> E;
  std::vector<std::size_t> B;
};

// Greedy partition with pos(E) = pos(A). For d = 1 the smallest generator
// (in absolute value, first occurrence) alone forms E.
ConvexPartition convex_partition(const IntegerMatrix& a);

class AffineSemigroup {
 public:
  // Validates pointedness and, when E is given, pos(E) = pos(A); otherwise
  // computes a convex partition. Computes the toric Gröbner basis.
  AffineSemigroup(IntegerMatrix generators, std::optional<std::vector<std::size_t>> E,
                  SemigroupOptions options = {});

  const IntegerMatrix& generators() const { return a_; }
  std::size_t dimension() const { return a_.rows(); }
  std::size_t num_generators() const { return a_.cols(); }
  IntegerVector generator(std::size_t i) const { return a_.column(i); }

  const std::vector<std::size_t>& E() const { return partition_.E; }
  const std::vector<std::size_t>& B() const { return partition_.B; }
  std::size_t r() const { return partition_.E.size(); }
  std::size_t s() const { return partition_.B.size(); }
  // Input index of the generator behind layout variable k, and back.
  std::size_t generator_of_variable(std::size_t k) const { return layout_[k]; }
  std::size_t variable_of_generator(std::size_t i) const { return position_[i]; }
  // Columns permuted into variable layout order.
  const IntegerMatrix& layout_matrix() const { return layout_matrix_; }

  const RationalVector& lambda() const { return lambda_; }
  Rational lambda_value(const IntegerVector& a) const;
  // lambda(a) times the order's common denominator.
  std::int64_t scaled_lambda(const IntegerVector& a) const;

  const TermOrder& order() const { return order_; }
  const GroebnerBasis& groebner() const { return gb_; }
  const SemigroupOptions& options() const { return options_; }

  std::size_t rank() const { return rank_; }
  bool is_simplicial() const { return r() == rank_; }

  // deg_A of an exponent vector in input order.
  IntegerVector deg(const Exponents& u) const;
  // deg_A of a monomial in variable layout.
  IntegerVector deg(const Monomial& m) const;
  // deg_A(iota(u)) for u in N^s.
  IntegerVector deg_Z(const Exponents& u) const;

  bool is_member(const IntegerVector& a) const;
  // All factorizations (input order), lexicographically sorted.
  std::vector<Exponents> factorizations(const IntegerVector& a) const;
  // Solutions v of sum v_k a_{idx[k]} = a over a subset of generators.
  std::vector<Exponents> factorizations_over(const std::vector<std::size_t>& idx,
                                             const IntegerVector& a) const;

  // Q, sorted lexicographically. Throws PartitionNotConic when some Z_j has
  // no pure power among the leads or the enumeration exceeds the cap.
  const std::vector<Exponents>& standard_Q() const;
  // All pairs (u, v) with u in Q, v in N^r and deg(Z^u Y^v) = a.
  std::vector<std::pair<Exponents, Exponents>> q_decompositions(const IntegerVector& a) const;
  // deg(iota(u)) for u in Q, sorted by lambda-value then coordinates.
  std::vector<IntegerVector> apery() const;

  // Numerical semigroups only (d = 1, positive generators, gcd 1).
  Integer frobenius() const;

 private:
  IntegerMatrix a_;
  ConvexPartition partition_;
  std::vector<std::size_t> layout_;
  std::vector<std::size_t> position_;
  IntegerMatrix layout_matrix_;
  RationalVector lambda_;
  TermOrder order_;
  GroebnerBasis gb_;
  SemigroupOptions options_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::int64_t>> cols64_;  // input order
  std::vector<std::int64_t> lambda_scaled_;
  std::vector<std::int64_t> weights_;  // scaled lambda per generator, input order

  struct QCache {
    std::once_flag once;
    std::vector<Exponents> q;
    std::vector<std::vector<std::int64_t>> degrees;  // deg_Z(u), u in q
    std::vector<std::int64_t> weights;               // scaled lambda of degrees
  };
  std::shared_ptr<QCache> q_cache_ = std::make_shared<QCache>();
  // Membership answers: a table of all elements up to `covered` (scaled
  // lambda), grown by doubling while it stays under a size cap, then single
  // searches remembered in `known`.
  struct MemberCache {
    std::mutex mu;
    std::int64_t covered = -1;
    bool table_full = false;
    std::set<std::vector<std::int64_t>> table;
    std::map<std::vector<std::int64_t>, bool> known;
  };
  std::shared_ptr<MemberCache> member_cache_ = std::make_shared<MemberCache>();
};

// Brute-force Apéry set of a numerical semigroup with respect to m, by a
// membership table; independent of any Gröbner computation. Sorted.
std::vector<Integer> apery_oracle_numerical(const std::vector<Integer>& gens,
                                            const Integer& m);

// Throws NotNumerical unless d = 1, all generators positive and gcd 1.
void require_numerical(const IntegerMatrix& a);

}  // namespace sgalg
