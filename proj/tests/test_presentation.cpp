#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgalg/error.hpp"
#include "sgalg/presentation.hpp"

using namespace sgalg;

namespace {

IntegerMatrix columns(std::vector<std::vector<long>> cols) {
  std::vector<IntegerVector> c;
  for (auto& col : cols) {
    IntegerVector v;
    for (long x : col) v.emplace_back(x);
    c.push_back(v);
  }
  return IntegerMatrix::from_columns(c, c.front().size());
}

// Every entry of a column has the column's degree: psi_0 maps the column to
// a signed sum of equal monomials of k[S].
void check_homogeneous(const AffineSemigroup& s, const ModulePresentation& p, const SparseColumn& c) {
  int signed_sum = 0;
  for (const auto& e : c.entries) {
    Exponents full = p.sigma[e.row];
    full.insert(full.end(), e.y.begin(), e.y.end());
    CHECK(s.deg(Monomial(full)) == c.degree);
    signed_sum += e.sign;
  }
  CHECK(signed_sum == 0);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("numerical semigroups are free over k[Y]") {
  AffineSemigroup s(columns({{8}, {11}, {18}}), std::nullopt);
  ModulePresentation p = build_presentation(s);
  CHECK(p.beta0() == 8);
  CHECK(p.beta1() == 0);
  CHECK(verify_presentation(s, p).ok());
  CHECK(cm_check(s));
}

TEST_CASE("non Cohen-Macaulay curve") {
  AffineSemigroup s(columns({{4, 0}, {3, 1}, {1, 3}, {0, 4}}), std::nullopt);
  ModulePresentation p = build_presentation(s);
  CHECK(p.beta0() == 5);
  REQUIRE(p.m_prime.size() == 1);
  CHECK(p.n.empty());
  CHECK(p.m_prime[0].degree == IntegerVector{6, 6});
  check_homogeneous(s, p, p.m_prime[0]);
  VerificationReport r = verify_presentation(s, p);
  CHECK(r.ok());
  CHECK(r.degrees_checked > 0);
  auto minimal = minimal_relation_degrees(s, p, Rational(20));
  CHECK(minimal.size() == 1);
  CHECK(minimal[IntegerVector{6, 6}] == 1);
  CHECK_FALSE(cm_check(s));
  CHECK_FALSE(cm_oracle(s));
  CHECK_FALSE(is_block_resolution(p));
}

TEST_CASE("a wrong presentation fails verification") {
  AffineSemigroup s(columns({{4, 0}, {3, 1}, {1, 3}, {0, 4}}), std::nullopt);
  ModulePresentation p = build_presentation(s);
  ModulePresentation missing = p;
  missing.m_prime.clear();
  VerificationReport r = verify_presentation(s, missing, Rational(6));
  CHECK_FALSE(r.ok());
  REQUIRE(r.exactness_failures.size() >= 1);
  CHECK(r.exactness_failures.front() == IntegerVector{6, 6});
  ModulePresentation broken = p;
  broken.m_prime[0].entries[0].y[0] += 1;
  CHECK_FALSE(verify_presentation(s, broken, Rational(6)).composition_zero);
}

TEST_CASE("presentations of random pointed semigroups verify") {
  std::mt19937 rng(53);
  int done = 0;
  for (int t = 0; t < 40 && done < 12; ++t) {
    std::uniform_int_distribution<int> dim(1, 2), num(2, 4);
    const std::size_t d = dim(rng);
    auto cols = oracle::random_columns(rng, d, num(rng), d == 1 ? 12 : 6);
    AffineSemigroup s(IntegerMatrix::from_columns(cols, d), std::nullopt);
    ModulePresentation p = build_presentation(s);
    for (const auto& c : p.m_prime) check_homogeneous(s, p, c);
    for (const auto& c : p.n) check_homogeneous(s, p, c);
    CHECK(verify_presentation(s, p).ok());
    ++done;
  }
}

TEST_CASE("cohen-macaulay test agrees with the lattice index oracle") {
  std::mt19937 rng(59);
  int compared = 0, non_cm = 0;
  for (int t = 0; t < 25; ++t) {
    auto cols = oracle::random_columns(rng, 2, 4, 6);
    IntegerMatrix a = IntegerMatrix::from_columns(cols, 2);
    if (integer_rank(a) < 2) continue;
    AffineSemigroup s(a, std::nullopt);
    if (!s.is_simplicial()) continue;
    std::vector<oracle::Vec> all, e;
    for (const auto& c : cols) all.push_back(oracle::to_vec(c));
    for (std::size_t i : s.E()) e.push_back(oracle::to_vec(cols[i]));
    const bool expected = static_cast<std::int64_t>(oracle::standard_Q(s).size()) == oracle::lattice_index_2d(all, e);
    CHECK(cm_check(s) == expected);
    CHECK(cm_oracle(s) == expected);
    ++compared;
    if (!expected) ++non_cm;
  }
  CHECK(compared >= 10);
  CHECK(non_cm >= 1);
}

TEST_CASE("regularity") {
  AffineSemigroup conic(columns({{2, 0}, {1, 1}, {0, 2}}), std::nullopt);
  Regularity r = regularity(conic);
  CHECK(r.module_value == 1);
  CHECK(r.ideal_value == 2);
  // twisted cubic in degree-one coordinates
  AffineSemigroup cubic(columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}}), std::nullopt);
  CHECK(regularity(cubic).module_value == 1);
  AffineSemigroup curve(columns({{4, 0}, {3, 1}, {1, 3}, {0, 4}}), std::nullopt);
  CHECK(code_of([&] { regularity(curve); }) == ErrorCode::NotCohenMacaulay);
  AffineSemigroup numerical(columns({{8}, {11}, {18}}), std::nullopt);
  CHECK(code_of([&] { regularity(numerical); }) == ErrorCode::NotStandardGraded);
}

TEST_CASE("non-simplicial partitions are rejected by the CM test") {
  AffineSemigroup s(columns({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}),
                    std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(code_of([&] { cm_check(s); }) == ErrorCode::NotSimplicial);
}

TEST_CASE("rows of the presentation") {
  AffineSemigroup s(columns({{8}, {11}, {18}}), std::nullopt);
  ModulePresentation p = build_presentation(s);
  for (std::size_t i = 0; i < p.sigma.size(); ++i) CHECK(p.row_of(p.sigma[i]) == i);
  CHECK(default_verification_bound(s) > 0);
}
