#include "sgalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sgalg/error.hpp"

namespace sgalg {

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntegerVector>& columns,
                                          std::size_t rows) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorCode::InvalidArgument, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t r) const {
  return IntegerVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
  IntegerVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntegerVector operator*(const IntegerMatrix& m, const IntegerVector& v) {
  if (m.cols() != v.size())
    throw Error(ErrorCode::InvalidArgument, "matrix-vector dimension mismatch");
  IntegerVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  HermiteForm out{m, IntegerMatrix::identity(m.rows()), 0, {}};
  IntegerMatrix& h = out.H;
  IntegerMatrix& u = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on the column below r: repeatedly move the smallest nonzero
    // entry to the pivot position and reduce the others by it.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t integer_rank(const IntegerMatrix& m) { return hermite_normal_form(m).rank; }

namespace {

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Pairwise size reduction: v_i -= round(<v_i,v_j>/<v_j,v_j>) v_j whenever
// that shortens v_i. Keeps the lattice, terminates because squared norms
// are positive integers that strictly decrease.
void size_reduce(std::vector<IntegerVector>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        Integer nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        Integer num = 2 * dot(basis[i], basis[j]) + nj;
        Integer q;
        Integer den = 2 * nj;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (q == 0) continue;
        IntegerVector cand = basis[i];
        for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= q * basis[j][k];
        if (dot(cand, cand) < dot(basis[i], basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

std::vector<IntegerVector> integer_kernel_basis(const IntegerMatrix& a) {
  HermiteForm hf = hermite_normal_form(a.transpose());
  std::vector<IntegerVector> basis;
  for (std::size_t r = hf.rank; r < hf.U.rows(); ++r) basis.push_back(hf.U.row(r));
  size_reduce(basis);
  for (auto& v : basis) {
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (it != v.end() && *it < 0)
      for (auto& x : v) x = -x;
  }
  return basis;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

// Dense phase-one tableau. Columns: structural, then slack, then artificial,
// then the right-hand side.
class PhaseOneTableau {
 public:
  PhaseOneTableau(std::size_t rows, std::size_t structural, std::size_t slack)
      : rows_(rows),
        structural_(structural),
        slack_(slack),
        cols_(structural + slack + rows + 1),
        cell_((rows + 1) * cols_),
        basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cell_[r * cols_ + c]; }
  Rational& objective(std::size_t c) { return cell_[rows_ * cols_ + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_ - 1); }
  std::size_t artificial(std::size_t r) const { return structural_ + slack_ + r; }

  void initialise() {
    for (std::size_t r = 0; r < rows_; ++r) {
      at(r, artificial(r)) = 1;
      basis_[r] = artificial(r);
    }
    // objective row holds reduced costs of "minimise sum of artificials"
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c >= structural_ + slack_ && c + 1 < cols_) continue;
      Rational s = 0;
      for (std::size_t r = 0; r < rows_; ++r) s -= at(r, c);
      objective(c) = s;
    }
  }

  // Bland's rule: lowest-index entering column with negative reduced cost,
  // ratio-test ties broken by lowest basic-variable index.
  void solve() {
    const std::size_t entering_limit = structural_ + slack_;
    for (;;) {
      std::size_t entering = entering_limit;
      for (std::size_t c = 0; c < entering_limit; ++c)
        if (objective(c) < 0) {
          entering = c;
          break;
        }
      if (entering == entering_limit) return;
      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, entering) <= 0) continue;
        Rational ratio = rhs(r) / at(r, entering);
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      // Phase one is bounded below by zero, so a pivot row always exists.
      if (leaving == rows_) return;
      pivot(leaving, entering);
    }
  }

  bool feasible() {
    Rational total = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] >= structural_ + slack_) total += rhs(r);
    return total == 0;
  }

  Rational value(std::size_t column) {
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] == column) return rhs(r);
    return 0;
  }

 private:
  void pivot(std::size_t pr, std::size_t pc) {
    Rational p = at(pr, pc);
    for (std::size_t c = 0; c < cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      Rational f = cell_[r * cols_ + pc];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (at(pr, c) == 0) continue;
        cell_[r * cols_ + c] -= f * at(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  std::size_t rows_, structural_, slack_, cols_;
  std::vector<Rational> cell_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult lp_feasible(std::size_t num_variables,
                     std::span<const LinearConstraint> constraints) {
  std::size_t slack = 0;
  for (const auto& c : constraints) {
    if (c.coefficients.size() != num_variables)
      throw Error(ErrorCode::InvalidArgument, "constraint has wrong number of coefficients");
    if (c.relation != Relation::Equal) ++slack;
  }
  // x_j = x_j^+ - x_j^-, both nonnegative.
  const std::size_t structural = 2 * num_variables;
  PhaseOneTableau t(constraints.size(), structural, slack);
  std::size_t next_slack = structural;
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto& c = constraints[r];
    for (std::size_t j = 0; j < num_variables; ++j) {
      t.at(r, 2 * j) = c.coefficients[j];
      t.at(r, 2 * j + 1) = -c.coefficients[j];
    }
    if (c.relation == Relation::LessEqual) t.at(r, next_slack++) = 1;
    if (c.relation == Relation::GreaterEqual) t.at(r, next_slack++) = -1;
    t.rhs(r) = c.rhs;
    if (c.rhs < 0) {
      for (std::size_t col = 0; col < structural + slack; ++col) t.at(r, col) = -t.at(r, col);
      t.rhs(r) = -t.rhs(r);
    }
  }
  t.initialise();
  t.solve();
  LPResult result;
  if (!t.feasible()) return result;
  result.feasible = true;
  result.witness.resize(num_variables);
  for (std::size_t j = 0; j < num_variables; ++j) {
    result.witness[j] = t.value(2 * j) - t.value(2 * j + 1);
    result.witness[j].canonicalize();
  }
  return result;
}

LPResult in_cone(const IntegerVector& point, const std::vector<IntegerVector>& generators) {
  const std::size_t n = generators.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t k = 0; k < point.size(); ++k) {
    LinearConstraint c;
    c.coefficients.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (generators[j].size() != point.size())
        throw Error(ErrorCode::InvalidArgument, "cone generator of wrong dimension");
      c.coefficients[j] = Rational(generators[j][k]);
    }
    c.relation = Relation::Equal;
    c.rhs = Rational(point[k]);
    cs.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint c;
    c.coefficients.assign(n, Rational(0));
    c.coefficients[j] = 1;
    c.relation = Relation::GreaterEqual;
    c.rhs = 0;
    cs.push_back(std::move(c));
  }
  return lp_feasible(n, cs);
}

RationalVector positive_functional(const IntegerMatrix& a) {
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    LinearConstraint c;
    for (std::size_t k = 0; k < a.rows(); ++k) c.coefficients.emplace_back(a(k, i));
    c.relation = Relation::GreaterEqual;
    c.rhs = 1;
    cs.push_back(std::move(c));
  }
  LPResult r = lp_feasible(a.rows(), cs);
  if (!r.feasible)
    throw Error(ErrorCode::NotPointed,
                "generators admit a nonzero nonnegative relation summing to 0 "
                "(the semigroup is not pointed, so factorizations are not finite)");
  return r.witness;
}

// ---------------------------------------------------------------------------
// Lattice index

namespace {

// Reduce v against the echelon rows of hf.H; true iff v lies in their
// integer span.
bool in_row_lattice(const HermiteForm& hf, IntegerVector v) {
  for (std::size_t k = 0; k < hf.rank; ++k) {
    const std::size_t p = hf.pivot_columns[k];
    const Integer& piv = hf.H(k, p);
    if (v[p] == 0) continue;
    if (!mpz_divisible_p(v[p].get_mpz_t(), piv.get_mpz_t())) return false;
    Integer q = v[p] / piv;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * hf.H(k, c);
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer pivot_product(const HermiteForm& hf) {
  Integer p = 1;
  for (std::size_t k = 0; k < hf.rank; ++k) p *= hf.H(k, hf.pivot_columns[k]);
  return p;
}

}  // namespace

std::optional<Integer> lattice_index(const std::vector<IntegerVector>& l1,
                                     const std::vector<IntegerVector>& l2) {
  std::size_t dim = 0;
  if (!l1.empty()) dim = l1.front().size();
  else if (!l2.empty()) dim = l2.front().size();
  HermiteForm h1 = hermite_normal_form(IntegerMatrix::from_rows(l1, dim));
  HermiteForm h2 = hermite_normal_form(IntegerMatrix::from_rows(l2, dim));
  for (const auto& v : l2)
    if (!in_row_lattice(h1, v))
      throw Error(ErrorCode::NotSublattice, "second lattice is not contained in the first");
  if (h2.rank < h1.rank) return std::nullopt;
  return Integer(pivot_product(h2) / pivot_product(h1));
}

// ---------------------------------------------------------------------------
// Rank over a field

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::uint64_t p) {
  std::map<std::size_t, ModRow> pivots;  // leading column -> monic row
  for (const auto& raw : rows) {
    std::map<std::size_t, std::uint64_t> acc;
    for (const auto& [c, v] : raw) {
      Integer m = v % Integer(static_cast<unsigned long>(p));
      if (m < 0) m += static_cast<unsigned long>(p);
      acc[c] = (acc[c] + m.get_ui()) % p;
    }
    ModRow row;
    for (auto& [c, v] : acc)
      if (v) row.emplace_back(c, v);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::uint64_t inv = powmod(row.front().second, p - 2, p);
        for (auto& e : row) e.second = mulmod(e.second, inv, p);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const std::uint64_t f = row.front().second;
      ModRow merged;
      auto a = row.begin();
      auto b = it->second.begin();
      while (a != row.end() || b != it->second.end()) {
        if (b == it->second.end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, (p - mulmod(f, b->second, p)) % p);
          ++b;
        } else {
          std::uint64_t v = (a->second + p - mulmod(f, b->second, p)) % p;
          if (v) merged.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
  }
  return pivots.size();
}

void remove_content(IntRow& row) {
  Integer g = 0;
  for (const auto& e : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
  if (g > 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free elimination over Z, equivalent to rank over Q.
std::size_t rank_rational(const std::vector<SparseRow>& rows) {
  std::map<std::size_t, IntRow> pivots;
  for (const auto& raw : rows) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [c, v] : raw) acc[c] += v;
    IntRow row;
    for (auto& [c, v] : acc)
      if (v != 0) row.emplace_back(c, v);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        remove_content(row);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const IntRow& piv = it->second;
      // row <- piv_lead * row - row_lead * piv
      Integer a_lead = piv.front().second;
      Integer b_lead = row.front().second;
      IntRow merged;
      auto a = row.begin();
      auto b = piv.begin();
      while (a != row.end() || b != piv.end()) {
        if (b == piv.end() || (a != row.end() && a->first < b->first)) {
          merged.emplace_back(a->first, a_lead * a->second);
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, -b_lead * b->second);
          ++b;
        } else {
          Integer v = a_lead * a->second - b_lead * b->second;
          if (v != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      remove_content(merged);
      row = std::move(merged);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank_over_field(const std::vector<SparseRow>& rows, Field field) {
  if (field.characteristic == 0) return rank_rational(rows);
  if (!is_prime(field.characteristic))
    throw Error(ErrorCode::InvalidArgument, "field characteristic must be 0 or a prime");
  return rank_mod_p(rows, field.characteristic);
}

std::size_t rank_over_field(const IntegerMatrix& m, Field field) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) rows[r].emplace_back(c, m(r, c));
  return rank_over_field(rows, field);
}

}  // namespace sgalg
