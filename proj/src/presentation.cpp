#include "sgalg/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sgalg/error.hpp"

namespace sgalg {

namespace {

using Vec64 = std::vector<std::int64_t>;

Monomial full_monomial(const Exponents& z, const Exponents& y) {
  Exponents e = z;
  e.insert(e.end(), y.begin(), y.end());
  return Monomial(std::move(e));
}

Exponents z_part(const Monomial& m, std::size_t s) {
  auto e = m.exponents();
  return Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(s));
}

Exponents y_part(const Monomial& m, std::size_t s) {
  auto e = m.exponents();
  return Exponents(e.begin() + static_cast<std::ptrdiff_t>(s), e.end());
}

bool is_zero(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec64 to_vec64(const IntegerVector& v) {
  Vec64 out;
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

// All Y-exponents v with weight(v) <= budget.
void enumerate_y(const std::vector<std::int64_t>& w, std::int64_t budget,
                 const std::function<void(const Exponents&, std::int64_t)>& f) {
  Exponents cur(w.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t used) {
    if (k == w.size()) {
      f(cur, used);
      return;
    }
    for (std::int64_t c = 0; used + c * w[k] <= budget; ++c) {
      cur[k] = static_cast<Monomial::Exponent>(c);
      rec(k + 1, used + c * w[k]);
    }
    cur[k] = 0;
  };
  if (budget >= 0) rec(0, 0);
}

std::int64_t scaled_bound(const AffineSemigroup& s, const Rational& bound) {
  Rational scaled = bound * Rational(static_cast<long>(s.order().weight_denominator()));
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return to_int64(fl);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Rank of a set of vectors over Q. Vectors of the form e_x - e_y span the
// cut space of a graph, whose rank is the number of edges kept by a
// spanning forest; anything else goes through sparse elimination.
std::size_t vector_rank(std::size_t num_nodes, const std::vector<SparseRow>& rows) {
  bool graphic = std::all_of(rows.begin(), rows.end(), [](const SparseRow& r) {
    return r.size() == 2 && r[0].first != r[1].first && r[0].second + r[1].second == 0 &&
           abs(r[0].second) == 1;
  });
  if (!graphic) return rank_over_field(rows, Field::rationals());
  DisjointSets ds(num_nodes);
  std::size_t rank = 0;
  for (const auto& r : rows)
    if (ds.unite(r[0].first, r[1].first)) ++rank;
  return rank;
}

struct DegreePiece {
  std::map<std::pair<std::size_t, Exponents>, std::size_t> nodes;
  std::vector<SparseRow> unshifted;  // columns themselves
  std::vector<SparseRow> shifted;    // Y^m * column with m != 1

  std::size_t node(std::size_t row, const Exponents& y) {
    auto [it, inserted] = nodes.emplace(std::make_pair(row, y), nodes.size());
    return it->second;
  }
};

// Basis elements held at once by graded_pieces; roughly 200 bytes each.
constexpr std::size_t kMaxVerificationNodes = 4'000'000;

// Free-module basis and column images by degree, up to a scaled bound.
std::map<Vec64, DegreePiece> graded_pieces(const AffineSemigroup& s, const ModulePresentation& p,
                                           std::int64_t budget) {
  const std::size_t ns = s.s();
  const std::size_t nr = s.r();
  std::vector<std::int64_t> yw;
  std::vector<Vec64> ydeg;
  for (std::size_t k = 0; k < nr; ++k) {
    yw.push_back(s.order().variable_weight(ns + k));
    ydeg.push_back(s.order().variable_degree(ns + k));
  }
  auto degree_of = [&](const Vec64& base, const Exponents& y) {
    Vec64 d = base;
    for (std::size_t k = 0; k < nr; ++k)
      if (y[k])
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = checked_add(d[c], checked_mul(ydeg[k][c], y[k]));
    return d;
  };

  std::map<Vec64, DegreePiece> pieces;
  std::size_t nodes = 0;
  const Exponents one_y(nr, 0);
  for (std::size_t i = 0; i < p.sigma.size(); ++i) {
    Monomial z = full_monomial(p.sigma[i], one_y);
    std::int64_t w0 = s.order().scaled_weight(z);
    Vec64 base = s.order().degree(z);
    enumerate_y(yw, budget - w0, [&](const Exponents& y, std::int64_t) {
      if (++nodes > kMaxVerificationNodes)
        throw Error(ErrorCode::CapExceeded, "verification bound needs more than " +
                                                std::to_string(kMaxVerificationNodes) +
                                                " basis elements; lower --bound");
      pieces[degree_of(base, y)].node(i, y);
    });
  }

  auto add_columns = [&](const std::vector<SparseColumn>& cols) {
    for (const auto& col : cols) {
      Vec64 base = to_vec64(col.degree);
      std::int64_t w0 = s.scaled_lambda(col.degree);
      enumerate_y(yw, budget - w0, [&](const Exponents& m, std::int64_t) {
        auto& piece = pieces[degree_of(base, m)];
        SparseRow row;
        for (const auto& e : col.entries)
          row.emplace_back(piece.node(e.row, add(e.y, m)), Integer(e.sign));
        (is_zero(m) ? piece.unshifted : piece.shifted).push_back(std::move(row));
      });
    }
  };
  add_columns(p.m_prime);
  add_columns(p.n);
  return pieces;
}

IntegerVector to_integer_vector(const Vec64& v) {
  IntegerVector out;
  for (std::int64_t x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

std::size_t ModulePresentation::row_of(const Exponents& u) const {
  auto it = std::lower_bound(sigma.begin(), sigma.end(), u);
  if (it == sigma.end() || *it != u) throw Error(ErrorCode::InvalidArgument, "exponent is not in Q");
  return static_cast<std::size_t>(it - sigma.begin());
}

std::vector<Binomial> se_generators(const AffineSemigroup& s) {
  std::vector<std::size_t> block(s.s());
  std::iota(block.begin(), block.end(), std::size_t{0});
  auto elim = eliminate(s.groebner().elements(), s.order(), block,
                        BuchbergerOptions::all_saturated(s.num_generators()));
  return minimalize(elim, s.order());
}

ModulePresentation build_presentation(const AffineSemigroup& s) {
  const std::size_t ns = s.s();
  ModulePresentation p;
  p.sigma = s.standard_Q();
  const GroebnerBasis& gb = s.groebner();

  auto push_unique = [](std::vector<SparseColumn>& cols, SparseColumn c) {
    if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(std::move(c));
  };

  for (const auto& g : gb.elements()) {
    Exponents u = z_part(g.lead, ns), v = y_part(g.lead, ns);
    Exponents u1 = z_part(g.trail, ns), v1 = y_part(g.trail, ns);
    if (is_zero(v)) continue;
    if (is_zero(u) && is_zero(u1)) continue;  // lies in I_{S_E}; covered by N
    for (const auto& q : p.sigma) {
      bool above = true;
      for (std::size_t k = 0; k < ns && above; ++k) above = q[k] >= u[k];
      if (!above) continue;
      Exponents w(ns);
      for (std::size_t k = 0; k < ns; ++k) w[k] = q[k] - u[k];
      Monomial rem = gb.normal_form(full_monomial(add(u1, w), Exponents(s.r(), 0)));
      Exponents u2 = z_part(rem, ns), w1 = y_part(rem, ns);
      SparseColumn col;
      col.degree = s.deg(full_monomial(q, v));
      std::size_t r1 = p.row_of(q), r2 = p.row_of(u2);
      Exponents y2 = add(v1, w1);
      if (r1 == r2 && v == y2) continue;
      col.entries.push_back({r1, +1, v});
      col.entries.push_back({r2, -1, y2});
      push_unique(p.m_prime, std::move(col));
    }
  }

  p.se_generators = se_generators(s);
  for (std::size_t i = 0; i < p.sigma.size(); ++i) {
    for (const auto& g : p.se_generators) {
      SparseColumn col;
      Exponents yl = y_part(g.lead, ns), yt = y_part(g.trail, ns);
      col.degree = s.deg(full_monomial(p.sigma[i], yl));
      col.entries.push_back({i, +1, yl});
      col.entries.push_back({i, -1, yt});
      p.n.push_back(std::move(col));
    }
  }
  return p;
}

Rational default_verification_bound(const AffineSemigroup& s) {
  std::int64_t best = 0;
  for (const auto& g : s.groebner().elements()) best = std::max(best, s.order().scaled_weight(g.lead));
  for (const auto& u : s.standard_Q()) best = std::max(best, s.scaled_lambda(s.deg_Z(u)));
  Rational b(Integer(static_cast<long>(checked_mul(best, 3))),
             Integer(static_cast<long>(s.order().weight_denominator())));
  b.canonicalize();
  return b;
}

VerificationReport verify_presentation(const AffineSemigroup& s, const ModulePresentation& p,
                                       std::optional<Rational> bound) {
  VerificationReport report;
  report.bound = bound ? *bound : default_verification_bound(s);
  const GroebnerBasis& gb = s.groebner();

  auto check_columns = [&](const std::vector<SparseColumn>& cols) {
    for (const auto& col : cols) {
      std::map<Monomial, int> image;
      bool homogeneous = true;
      for (const auto& e : col.entries) {
        if (e.row >= p.sigma.size() || e.y.size() != s.r()) {
          homogeneous = false;
          continue;
        }
        Monomial m = full_monomial(p.sigma[e.row], e.y);
        if (s.deg(m) != col.degree) homogeneous = false;
        image[gb.normal_form(m)] += e.sign;
      }
      bool zero = homogeneous && std::all_of(image.begin(), image.end(),
                                             [](const auto& kv) { return kv.second == 0; });
      if (!zero) {
        report.composition_zero = false;
        report.composition_failures.push_back(col.degree);
      }
    }
  };
  check_columns(p.m_prime);
  check_columns(p.n);

  auto pieces = graded_pieces(s, p, scaled_bound(s, report.bound));
  for (auto& [degree, piece] : pieces) {
    ++report.degrees_checked;
    // psi_0 sends every basis element of degree a to t^a, so it has rank 1
    // on a nonzero graded piece.
    const std::size_t kernel = piece.nodes.empty() ? 0 : piece.nodes.size() - 1;
    std::vector<SparseRow> all = piece.unshifted;
    all.insert(all.end(), piece.shifted.begin(), piece.shifted.end());
    const std::size_t image = vector_rank(piece.nodes.size(), all);
    if (image != kernel) report.exactness_failures.push_back(to_integer_vector(degree));
  }
  return report;
}

std::map<IntegerVector, std::size_t> minimal_relation_degrees(const AffineSemigroup& s,
                                                              const ModulePresentation& p,
                                                              const Rational& bound) {
  std::map<IntegerVector, std::size_t> out;
  auto pieces = graded_pieces(s, p, scaled_bound(s, bound));
  for (auto& [degree, piece] : pieces) {
    if (piece.unshifted.empty()) continue;
    std::vector<SparseRow> all = piece.shifted;
    const std::size_t lower = vector_rank(piece.nodes.size(), all);
    all.insert(all.end(), piece.unshifted.begin(), piece.unshifted.end());
    const std::size_t total = vector_rank(piece.nodes.size(), all);
    if (total > lower) out[to_integer_vector(degree)] = total - lower;
  }
  return out;
}

namespace {

void require_simplicial(const AffineSemigroup& s) {
  if (!s.is_simplicial())
    throw Error(ErrorCode::NotSimplicial,
                "E has " + std::to_string(s.r()) + " generators but rank ZA is " +
                    std::to_string(s.rank()) + ", so S is not simplicial for this partition");
}

}  // namespace

bool cm_check(const AffineSemigroup& s) {
  require_simplicial(s);
  const std::size_t ns = s.s();
  for (const auto& m : s.groebner().initial_ideal())
    for (std::size_t v = ns; v < m.size(); ++v)
      if (m[v]) return false;
  return true;
}

bool cm_oracle(const AffineSemigroup& s) {
  require_simplicial(s);
  std::vector<IntegerVector> all, e;
  for (std::size_t i = 0; i < s.num_generators(); ++i) all.push_back(s.generator(i));
  for (std::size_t i : s.E()) e.push_back(s.generator(i));
  auto index = lattice_index(all, e);
  if (!index) return false;
  return Integer(static_cast<unsigned long>(s.standard_Q().size())) == *index;
}

Regularity regularity(const AffineSemigroup& s) {
  if (!cm_check(s))
    throw Error(ErrorCode::NotCohenMacaulay,
                "the initial ideal has a generator involving a Y-variable, so k[S] is not Cohen-Macaulay");
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < s.num_generators(); ++i) {
    LinearConstraint c;
    for (const auto& x : s.generator(i)) c.coefficients.emplace_back(x);
    c.relation = Relation::Equal;
    c.rhs = 1;
    cons.push_back(std::move(c));
  }
  if (!lp_feasible(s.dimension(), cons).feasible)
    throw Error(ErrorCode::NotStandardGraded,
                "the generators do not lie on a common affine hyperplane, so I_S is not standard graded");
  Regularity reg;
  for (const auto& u : s.standard_Q()) {
    std::int64_t total = 0;
    for (auto x : u) total += x;
    reg.module_value = std::max(reg.module_value, total);
  }
  reg.ideal_value = reg.module_value + 1;
  return reg;
}

bool is_block_resolution(const ModulePresentation& p) { return p.m_prime.empty(); }

}  // namespace sgalg
