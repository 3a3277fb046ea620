#include "sgalg/homology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "sgalg/error.hpp"

namespace sgalg {

namespace {

int face_size(std::uint32_t f) { return std::popcount(f); }

std::string variable_name(const AffineSemigroup& s, std::size_t generator) {
  std::size_t k = s.variable_of_generator(generator);
  return k < s.s() ? "Z" + std::to_string(k + 1) : "Y" + std::to_string(k - s.s() + 1);
}

std::string y_monomial_name(const Exponents& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    if (!out.empty()) out += "*";
    out += "Y" + std::to_string(k + 1);
    if (v[k] > 1) out += "^" + std::to_string(v[k]);
  }
  return out.empty() ? "1" : out;
}

IntegerVector minus(const IntegerVector& a, const IntegerVector& b) {
  IntegerVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntegerVector subset_sum(const AffineSemigroup& s, const std::vector<std::size_t>& idx,
                         std::uint32_t mask) {
  IntegerVector sum(s.dimension(), 0);
  for (std::size_t j = 0; j < idx.size(); ++j)
    if (mask >> j & 1u) {
      IntegerVector g = s.generator(idx[j]);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += g[k];
    }
  return sum;
}

// Squarefree divisor complex of a over the listed generators.
SimplicialComplex divisor_complex(const AffineSemigroup& s, const IntegerVector& a,
                                  const std::vector<std::size_t>& idx) {
  std::vector<std::string> labels;
  for (std::size_t i : idx) labels.push_back(variable_name(s, i));
  return complex_from_predicate(std::move(labels), [&](std::uint32_t mask) {
    return s.is_member(minus(a, subset_sum(s, idx, mask)));
  });
}

}  // namespace

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces.begin(), faces.end(), face, [](std::uint32_t x, std::uint32_t y) {
    return std::pair(face_size(x), x) < std::pair(face_size(y), y);
  });
}

bool SimplicialComplex::is_full_simplex() const {
  return !labels.empty() && faces.size() == (std::size_t{1} << labels.size());
}

SimplicialComplex complex_from_predicate(std::vector<std::string> labels,
                                         const std::function<bool(std::uint32_t)>& is_face) {
  const std::size_t n = labels.size();
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices,
                "complex has " + std::to_string(n) + " vertices; the limit is " +
                    std::to_string(kMaxVertices));
  SimplicialComplex k;
  k.labels = std::move(labels);
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<char> present(total, 0);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1)
      ok = present[mask & ~(rest & -rest)];
    if (ok && is_face(mask)) {
      present[mask] = 1;
      k.faces.push_back(mask);
    }
    if (mask == 0 && !present[0]) break;
  }
  std::sort(k.faces.begin(), k.faces.end(), [](std::uint32_t x, std::uint32_t y) {
    return std::pair(face_size(x), x) < std::pair(face_size(y), y);
  });
  return k;
}

std::vector<SparseRow> boundary_matrix(const SimplicialComplex& k, int i) {
  std::vector<SparseRow> rows;
  if (i < 0) return rows;
  std::map<std::uint32_t, std::size_t> lower;
  for (std::uint32_t f : k.faces)
    if (face_size(f) == i) lower.emplace(f, lower.size());
  for (std::uint32_t f : k.faces) {
    if (face_size(f) != i + 1) continue;
    SparseRow row;
    int position = 0;
    for (std::uint32_t rest = f; rest; rest &= rest - 1, ++position) {
      std::uint32_t facet = f & ~(rest & -rest);
      row.emplace_back(lower.at(facet), Integer(position % 2 == 0 ? 1 : -1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t reduced_homology(const SimplicialComplex& k, int i, Field field) {
  if (k.empty() || i < -1) return 0;
  if (k.is_full_simplex()) return 0;
  std::size_t chains = 0;
  for (std::uint32_t f : k.faces)
    if (face_size(f) == i + 1) ++chains;
  if (chains == 0) return 0;
  std::size_t down = rank_over_field(boundary_matrix(k, i), field);
  std::size_t up = rank_over_field(boundary_matrix(k, i + 1), field);
  return chains - down - up;
}

VertexSetC vertex_set_C(const AffineSemigroup& s, const IntegerVector& a) {
  std::map<Exponents, Exponents> found;
  for (auto& [u, v] : s.q_decompositions(a)) found.emplace(std::move(v), std::move(u));
  VertexSetC c;
  for (auto& [v, u] : found) {
    c.monomials.push_back(v);
    c.witnesses.push_back(u);
  }
  return c;
}

SimplicialComplex build_T(const AffineSemigroup& s, const IntegerVector& a) {
  if (s.r() > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices, "E has more than " + std::to_string(kMaxVertices) + " generators");
  return divisor_complex(s, a, s.E());
}

SimplicialComplex build_Delta(const AffineSemigroup& s, const IntegerVector& a) {
  if (s.num_generators() > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices,
                "more than " + std::to_string(kMaxVertices) + " generators");
  std::vector<std::size_t> all(s.num_generators());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return divisor_complex(s, a, all);
}

SimplicialComplex build_Gamma(const AffineSemigroup& s, const IntegerVector& a) {
  VertexSetC c = vertex_set_C(s, a);
  if (c.monomials.size() > kMaxVertices)
    throw Error(ErrorCode::TooManyVertices,
                "C_a has " + std::to_string(c.monomials.size()) + " monomials; the limit is " +
                    std::to_string(kMaxVertices));
  std::vector<std::string> labels;
  for (const auto& v : c.monomials) labels.push_back(y_monomial_name(v));
  const bool nonempty = !c.monomials.empty();
  const std::size_t nr = s.r();
  return complex_from_predicate(std::move(labels), [&](std::uint32_t mask) {
    if (mask == 0) return nonempty;
    for (std::size_t k = 0; k < nr; ++k) {
      bool shared = true;
      for (std::size_t j = 0; j < c.monomials.size() && shared; ++j)
        if (mask >> j & 1u) shared = c.monomials[j][k] > 0;
      if (shared) return true;
    }
    return false;
  });
}

std::size_t betti_at_degree(const AffineSemigroup& s, const IntegerVector& a, int i, Field field) {
  return reduced_homology(build_Gamma(s, a), i, field);
}

std::vector<NerveRow> nerve_check(const AffineSemigroup& s, const IntegerVector& a, int i_max,
                                  Field field) {
  SimplicialComplex gamma = build_Gamma(s, a);
  SimplicialComplex t = build_T(s, a);
  std::vector<NerveRow> rows;
  for (int i = -1; i <= i_max; ++i)
    rows.push_back({i, reduced_homology(gamma, i, field), reduced_homology(t, i, field)});
  return rows;
}

bool TransferReport::pass() const {
  if (!hypothesis()) return true;
  return std::all_of(rows.begin(), rows.end(), [](const TransferRow& r) { return r.vacuous() || r.value == 0; });
}

bool TransferReport::containment() const {
  if (hypothesis()) return true;
  return std::any_of(rows.begin(), rows.end(), [](const TransferRow& r) { return r.value != 0; });
}

// Rows are computed whether or not the hypothesis holds, so that both the
// stated implication and its converse can be read off.
TransferReport vanishing_transfer_check(const AffineSemigroup& s, const IntegerVector& a, int i,
                                        Field field) {
  TransferReport report;
  report.a = a;
  report.i = i;
  report.hypothesis_value = reduced_homology(build_Delta(s, a), i, field);
  const std::vector<std::size_t>& b = s.B();
  if (b.size() >= 32) throw Error(ErrorCode::TooManyVertices, "too many generators in B");
  const int max_size = std::min<int>(i + 1, static_cast<int>(b.size()));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << b.size()); ++mask) {
    if (face_size(mask) > max_size) continue;
    TransferRow row;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (mask >> j & 1u) row.F.push_back(b[j]);
    row.degree = minus(a, subset_sum(s, b, mask));
    row.index = i - face_size(mask);
    row.value = betti_at_degree(s, row.degree, row.index, field);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<IntegerVector> elements_up_to(const AffineSemigroup& s, const Rational& bound) {
  Rational scaled = bound * Rational(static_cast<long>(s.order().weight_denominator()));
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const std::int64_t budget = to_int64(fl);
  std::set<std::pair<std::int64_t, IntegerVector>> seen;
  const std::size_t ns = s.s(), nr = s.r();
  std::vector<std::int64_t> yw;
  for (std::size_t k = 0; k < nr; ++k) yw.push_back(s.order().variable_weight(ns + k));
  for (const auto& u : s.standard_Q()) {
    IntegerVector base = s.deg_Z(u);
    std::int64_t w0 = s.scaled_lambda(base);
    if (w0 > budget) continue;
    Exponents v(nr, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t used) {
      if (k == nr) {
        IntegerVector d = base;
        for (std::size_t j = 0; j < nr; ++j)
          if (v[j]) {
            IntegerVector e = s.generator(s.E()[j]);
            for (std::size_t c = 0; c < d.size(); ++c) d[c] += e[c] * v[j];
          }
        seen.emplace(used, std::move(d));
        return;
      }
      for (std::int64_t c = 0; used + c * yw[k] <= budget; ++c) {
        v[k] = static_cast<Monomial::Exponent>(c);
        rec(k + 1, used + c * yw[k]);
      }
      v[k] = 0;
    };
    rec(0, w0);
  }
  std::vector<IntegerVector> out;
  for (auto& [w, d] : seen) out.push_back(d);
  return out;
}

}  // namespace sgalg
