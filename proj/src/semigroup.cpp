#include "sgalg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "sgalg/error.hpp"
#include "sgalg/toric.hpp"

namespace sgalg {

namespace {

using Vec64 = std::vector<std::int64_t>;

Vec64 to_vec64(const IntegerVector& v) {
  Vec64 out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}


std::int64_t dot(const Vec64& a, const Vec64& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

// Depth-first search over multiplicities of a list of generators, largest
// multiplicity first. Every generator has positive weight, so the weight of
// the residual bounds each multiplicity.
class CombinationSearch {
 public:
  CombinationSearch(std::vector<Vec64> gens, Vec64 weights)
      : gens_(std::move(gens)), weights_(std::move(weights)) {}

  bool exists(Vec64 target, std::int64_t weight) {
    dead_.clear();
    return exists_from(0, target, weight);
  }

  std::vector<Exponents> all(Vec64 target, std::int64_t weight) {
    dead_.clear();
    std::vector<Exponents> out;
    Exponents cur(gens_.size(), 0);
    collect(0, target, weight, cur, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static bool is_zero(const Vec64& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  }

  std::int64_t max_count(std::size_t k, std::int64_t weight) const {
    return weight < 0 ? -1 : weight / weights_[k];
  }

  // c with residual == c * gens_[k] and weight == c * weights_[k], or -1.
  std::int64_t is_multiple(std::size_t k, const Vec64& residual, std::int64_t weight) const {
    if (weight % weights_[k]) return -1;
    const std::int64_t c = weight / weights_[k];
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (residual[i] != checked_mul(c, gens_[k][i])) return -1;
    return c;
  }

  bool exists_from(std::size_t k, Vec64& residual, std::int64_t weight) {
    if (weight == 0) return is_zero(residual);
    if (weight < 0 || k == gens_.size()) return false;
    if (k + 1 == gens_.size()) return is_multiple(k, residual, weight) >= 0;
    if (dead_.count({k, residual})) return false;
    const std::int64_t cmax = max_count(k, weight);
    for (std::int64_t c = cmax; c >= 0; --c) {
      Vec64 next = residual;
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = checked_add(next[i], -checked_mul(c, gens_[k][i]));
      if (exists_from(k + 1, next, weight - c * weights_[k])) return true;
    }
    dead_.insert({k, residual});
    return false;
  }

  bool collect(std::size_t k, const Vec64& residual, std::int64_t weight, Exponents& cur,
               std::vector<Exponents>& out) {
    if (weight == 0) {
      if (!is_zero(residual)) return false;
      out.push_back(cur);
      return true;
    }
    if (weight < 0 || k == gens_.size()) return false;
    if (k + 1 == gens_.size()) {
      const std::int64_t c = is_multiple(k, residual, weight);
      if (c < 0) return false;
      if (c > std::numeric_limits<Monomial::Exponent>::max())
        throw Error(ErrorCode::Overflow, "factorization exponent exceeds 32 bits");
      cur[k] = static_cast<Monomial::Exponent>(c);
      out.push_back(cur);
      cur[k] = 0;
      return true;
    }
    if (dead_.count({k, residual})) return false;
    bool found = false;
    const std::int64_t cmax = max_count(k, weight);
    for (std::int64_t c = cmax; c >= 0; --c) {
      if (c > std::numeric_limits<Monomial::Exponent>::max())
        throw Error(ErrorCode::Overflow, "factorization exponent exceeds 32 bits");
      Vec64 next = residual;
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = checked_add(next[i], -checked_mul(c, gens_[k][i]));
      cur[k] = static_cast<Monomial::Exponent>(c);
      found = collect(k + 1, next, weight - c * weights_[k], cur, out) || found;
    }
    cur[k] = 0;
    if (!found) dead_.insert({k, residual});
    return found;
  }

  std::vector<Vec64> gens_;
  Vec64 weights_;
  std::set<std::pair<std::size_t, Vec64>> dead_;
};

bool in_cone_of(const IntegerMatrix& a, std::size_t i, const std::vector<std::size_t>& others) {
  if (others.empty()) return false;
  std::vector<IntegerVector> gens;
  for (std::size_t j : others) gens.push_back(a.column(j));
  return in_cone(a.column(i), gens).feasible;
}

}  // namespace

void require_numerical(const IntegerMatrix& a) {
  if (a.rows() != 1) throw Error(ErrorCode::NotNumerical, "generators are not one-dimensional");
  if (a.cols() == 0) throw Error(ErrorCode::NotNumerical, "no generators");
  Integer g = 0;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (a(0, i) <= 0) throw Error(ErrorCode::NotNumerical, "generators must be positive");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(0, i).get_mpz_t());
  }
  if (g != 1) throw Error(ErrorCode::NotNumerical, "generators are not coprime, so the complement of S in N is infinite");
}

ConvexPartition convex_partition(const IntegerMatrix& a) {
  ConvexPartition p;
  const std::size_t n = a.cols();
  if (n == 0) return p;
  if (a.rows() == 1) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (abs(a(0, i)) < abs(a(0, best))) best = i;
    p.E = {best};
    for (std::size_t i = 0; i < n; ++i)
      if (i != best) p.B.push_back(i);
    return p;
  }
  std::vector<bool> kept(n, true);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && kept[j]) others.push_back(j);
    if (in_cone_of(a, i, others)) kept[i] = false;
  }
  for (std::size_t i = 0; i < n; ++i) (kept[i] ? p.E : p.B).push_back(i);
  return p;
}

AffineSemigroup::AffineSemigroup(IntegerMatrix generators,
                                 std::optional<std::vector<std::size_t>> E,
                                 SemigroupOptions options)
    : a_(std::move(generators)), options_(std::move(options)) {
  const std::size_t n = a_.cols();
  if (n == 0 || a_.rows() == 0)
    throw Error(ErrorCode::InvalidArgument, "need at least one generator of dimension >= 1");
  lambda_ = positive_functional(a_);

  if (E) {
    std::vector<std::size_t> e = *E;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(ErrorCode::InvalidPartition, "E lists a generator twice");
    for (std::size_t i : e)
      if (i >= n) throw Error(ErrorCode::InvalidPartition, "E index out of range");
    partition_.E = e;
    for (std::size_t i = 0; i < n; ++i)
      if (!std::binary_search(e.begin(), e.end(), i)) partition_.B.push_back(i);
    for (std::size_t b : partition_.B)
      if (!in_cone_of(a_, b, partition_.E))
        throw Error(ErrorCode::InvalidPartition,
                    "generator " + std::to_string(b) + " lies outside pos(E)");
  } else {
    partition_ = convex_partition(a_);
  }

  layout_ = partition_.B;
  layout_.insert(layout_.end(), partition_.E.begin(), partition_.E.end());
  position_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) position_[layout_[k]] = k;
  std::vector<IntegerVector> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(a_.column(layout_[k]));
  layout_matrix_ = IntegerMatrix::from_columns(cols, a_.rows());

  order_ = TermOrder::from_matrix(layout_matrix_, lambda_);
  if (!options_.tie_break.empty()) order_ = order_.with_tie_break(options_.tie_break);

  Integer den = order_.weight_denominator();
  for (const auto& q : lambda_) lambda_scaled_.push_back(to_int64(q.get_num() * (den / q.get_den())));
  for (std::size_t i = 0; i < n; ++i) {
    cols64_.push_back(to_vec64(a_.column(i)));
    weights_.push_back(order_.variable_weight(position_[i]));
  }
  rank_ = integer_rank(a_);

  gb_ = toric_groebner(layout_matrix_, order_);
}

Rational AffineSemigroup::lambda_value(const IntegerVector& a) const {
  Rational v = 0;
  for (std::size_t k = 0; k < a.size(); ++k) v += lambda_[k] * a[k];
  v.canonicalize();
  return v;
}

std::int64_t AffineSemigroup::scaled_lambda(const IntegerVector& a) const {
  if (a.size() != dimension()) throw Error(ErrorCode::InvalidArgument, "element has wrong dimension");
  return dot(lambda_scaled_, to_vec64(a));
}

IntegerVector AffineSemigroup::deg(const Exponents& u) const {
  if (u.size() != num_generators()) throw Error(ErrorCode::InvalidArgument, "factorization has wrong length");
  IntegerVector out(dimension(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i])
      for (std::size_t k = 0; k < dimension(); ++k) out[k] += a_(k, i) * u[i];
  return out;
}

IntegerVector AffineSemigroup::deg(const Monomial& m) const {
  if (m.size() != num_generators()) throw Error(ErrorCode::InvalidArgument, "monomial has wrong length");
  IntegerVector out(dimension(), 0);
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v])
      for (std::size_t k = 0; k < dimension(); ++k) out[k] += layout_matrix_(k, v) * m[v];
  return out;
}

IntegerVector AffineSemigroup::deg_Z(const Exponents& u) const {
  if (u.size() != s()) throw Error(ErrorCode::InvalidArgument, "Z-exponent has wrong length");
  IntegerVector out(dimension(), 0);
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j])
      for (std::size_t k = 0; k < dimension(); ++k) out[k] += layout_matrix_(k, j) * u[j];
  return out;
}

namespace {

constexpr std::size_t kMemberTableCap = 400'000;

// All sums of generators with scaled weight <= budget, or false when there
// are more than kMemberTableCap of them.
bool fill_member_table(const std::vector<Vec64>& gens, const Vec64& weights, std::int64_t budget,
                       std::set<Vec64>& table) {
  table.clear();
  std::vector<std::pair<Vec64, std::int64_t>> frontier{{Vec64(gens.front().size(), 0), 0}};
  table.insert(frontier.front().first);
  while (!frontier.empty()) {
    std::vector<std::pair<Vec64, std::int64_t>> next;
    for (const auto& [v, w] : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (w + weights[k] > budget) continue;
        Vec64 x = v;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = checked_add(x[i], gens[k][i]);
        if (table.insert(x).second) {
          if (table.size() > kMemberTableCap) return false;
          next.emplace_back(std::move(x), w + weights[k]);
        }
      }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

bool AffineSemigroup::is_member(const IntegerVector& a) const {
  const std::int64_t weight = scaled_lambda(a);
  if (weight < 0) return false;
  Vec64 target = to_vec64(a);
  MemberCache& cache = *member_cache_;
  std::lock_guard lock(cache.mu);
  if (weight > cache.covered && !cache.table_full) {
    const std::int64_t budget = std::max(weight, 2 * std::max<std::int64_t>(cache.covered, 1));
    if (fill_member_table(cols64_, weights_, budget, cache.table)) {
      cache.covered = budget;
    } else {
      cache.table_full = true;
      cache.table.clear();
      cache.covered = -1;
    }
  }
  if (weight <= cache.covered) return cache.table.count(target) > 0;
  auto it = cache.known.find(target);
  if (it != cache.known.end()) return it->second;
  CombinationSearch search(cols64_, weights_);
  const bool member = search.exists(target, weight);
  cache.known.emplace(std::move(target), member);
  return member;
}

std::vector<Exponents> AffineSemigroup::factorizations(const IntegerVector& a) const {
  std::vector<std::size_t> all(num_generators());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return factorizations_over(all, a);
}

std::vector<Exponents> AffineSemigroup::factorizations_over(const std::vector<std::size_t>& idx,
                                                           const IntegerVector& a) const {
  std::vector<Vec64> gens;
  Vec64 w;
  for (std::size_t i : idx) {
    if (i >= num_generators()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    gens.push_back(cols64_[i]);
    w.push_back(weights_[i]);
  }
  CombinationSearch search(std::move(gens), std::move(w));
  return search.all(to_vec64(a), scaled_lambda(a));
}

const std::vector<Exponents>& AffineSemigroup::standard_Q() const {
  std::call_once(q_cache_->once, [this] {
    const std::size_t ns = s();
    std::vector<Exponents> walls;  // Z-parts of pure-Z leads
    for (const auto& b : gb_.elements()) {
      bool pure = true;
      for (std::size_t v = ns; v < b.lead.size(); ++v)
        if (b.lead[v]) pure = false;
      if (!pure) continue;
      auto e = b.lead.exponents();
      walls.emplace_back(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(ns));
    }
    for (std::size_t j = 0; j < ns; ++j) {
      bool has_power = std::any_of(walls.begin(), walls.end(), [&](const Exponents& w) {
        for (std::size_t k = 0; k < ns; ++k)
          if (k != j && w[k]) return false;
        return true;
      });
      if (!has_power)
        throw Error(ErrorCode::PartitionNotConic,
                    "no power of Z_" + std::to_string(j + 1) + " is a leading monomial, so Q is infinite");
    }
    auto standard = [&walls, ns](const Exponents& u) {
      for (const auto& w : walls) {
        bool divides = true;
        for (std::size_t k = 0; k < ns && divides; ++k) divides = w[k] <= u[k];
        if (divides) return false;
      }
      return true;
    };
    // Each u is reached once, from u - e_j with j its last nonzero index.
    std::vector<Exponents> q;
    std::vector<Exponents> stack{Exponents(ns, 0)};
    while (!stack.empty()) {
      Exponents u = std::move(stack.back());
      stack.pop_back();
      q.push_back(u);
      if (q.size() > options_.q_cap)
        throw Error(ErrorCode::PartitionNotConic, "standard set Q exceeds the enumeration cap");
      std::size_t last = 0;
      for (std::size_t k = 0; k < ns; ++k)
        if (u[k]) last = k;
      for (std::size_t j = last; j < ns; ++j) {
        Exponents next = u;
        ++next[j];
        if (standard(next)) stack.push_back(std::move(next));
      }
    }
    std::sort(q.begin(), q.end());
    for (const auto& u : q) {
      Vec64 d(dimension(), 0);
      for (std::size_t j = 0; j < ns; ++j)
        if (u[j])
          for (std::size_t k = 0; k < d.size(); ++k)
            d[k] = checked_add(d[k], checked_mul(u[j], cols64_[layout_[j]][k]));
      q_cache_->weights.push_back(dot(lambda_scaled_, d));
      q_cache_->degrees.push_back(std::move(d));
    }
    q_cache_->q = std::move(q);
  });
  return q_cache_->q;
}

std::vector<std::pair<Exponents, Exponents>> AffineSemigroup::q_decompositions(
    const IntegerVector& a) const {
  const auto& q = standard_Q();
  const Vec64 target = to_vec64(a);
  const std::int64_t weight = scaled_lambda(a);
  std::vector<Vec64> gens;
  Vec64 w;
  for (std::size_t i : E()) {
    gens.push_back(cols64_[i]);
    w.push_back(weights_[i]);
  }
  CombinationSearch search(std::move(gens), std::move(w));
  std::vector<std::pair<Exponents, Exponents>> out;
  for (std::size_t n = 0; n < q.size(); ++n) {
    const std::int64_t rest_weight = weight - q_cache_->weights[n];
    if (rest_weight < 0) continue;
    Vec64 rest = target;
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= q_cache_->degrees[n][k];
    for (auto& v : search.all(rest, rest_weight)) out.emplace_back(q[n], std::move(v));
  }
  return out;
}

std::vector<IntegerVector> AffineSemigroup::apery() const {
  std::vector<std::pair<std::int64_t, IntegerVector>> keyed;
  for (const auto& u : standard_Q()) {
    IntegerVector a = deg_Z(u);
    keyed.emplace_back(scaled_lambda(a), std::move(a));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<IntegerVector> out;
  out.reserve(keyed.size());
  for (auto& [w, a] : keyed) out.push_back(std::move(a));
  return out;
}

Integer AffineSemigroup::frobenius() const {
  require_numerical(a_);
  std::size_t m = convex_partition(a_).E.front();
  if (partition_.E != std::vector<std::size_t>{m}) {
    AffineSemigroup canonical(a_, std::vector<std::size_t>{m}, options_);
    return canonical.frobenius();
  }
  auto ap = apery();
  Integer best = ap.front()[0];
  for (const auto& a : ap) best = std::max(best, a[0]);
  return best - a_(0, m);
}

std::vector<Integer> apery_oracle_numerical(const std::vector<Integer>& gens, const Integer& m) {
  IntegerMatrix a(1, gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) a(0, i) = gens[i];
  require_numerical(a);
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "m must be a positive element");
  Integer top = *std::max_element(gens.begin(), gens.end());
  const std::int64_t mm = to_int64(m);
  const std::int64_t bound = checked_add(checked_mul(mm, to_int64(top)), mm);
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  std::vector<std::int64_t> g;
  for (const auto& x : gens) g.push_back(to_int64(x));
  for (std::int64_t x = 1; x <= bound; ++x)
    for (std::int64_t y : g)
      if (y <= x && member[static_cast<std::size_t>(x - y)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
  if (!member[static_cast<std::size_t>(mm)])
    throw Error(ErrorCode::InvalidArgument, "m is not an element of the semigroup");
  std::vector<std::int64_t> least(static_cast<std::size_t>(mm), -1);
  for (std::int64_t x = 0; x <= bound; ++x) {
    auto& slot = least[static_cast<std::size_t>(x % mm)];
    if (member[static_cast<std::size_t>(x)] && slot < 0) slot = x;
  }
  std::vector<Integer> out;
  for (std::int64_t x : least) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "membership table too short");
    out.emplace_back(static_cast<long>(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sgalg
