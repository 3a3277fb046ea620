#pragma once

// Simplicial complexes attached to a degree a of S (T_a, Gamma_a, Delta_a)
// and their reduced homology over Q or GF(p).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgalg/linalg.hpp"
#include "sgalg/semigroup.hpp"

namespace sgalg {

inline constexpr std::size_t kMaxVertices = 20;

// Faces are vertex bitmasks, sorted by (size, mask). The empty face is
// present exactly when the complex is nonempty.
struct SimplicialComplex {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> faces;

  std::size_t num_vertices() const { return labels.size(); }
  bool empty() const { return faces.empty(); }
  bool contains(std::uint32_t face) const;
  bool is_full_simplex() const;
};

// The smallest down-closed family on n vertices containing exactly the sets
// accepted by `is_face`, which must itself be down-closed. Throws
// TooManyVertices above kMaxVertices.
SimplicialComplex complex_from_predicate(std::vector<std::string> labels,
                                         const std::function<bool(std::uint32_t)>& is_face);

// Matrix of the boundary map from i-faces to (i-1)-faces, one row per
// i-face; i = 0 is the augmentation onto the empty face.
std::vector<SparseRow> boundary_matrix(const SimplicialComplex& k, int i);

std::size_t reduced_homology(const SimplicialComplex& k, int i, Field field = Field::rationals());

struct VertexSetC {
  std::vector<Exponents> monomials;  // Y-exponents, sorted, distinct
  std::vector<Exponents> witnesses;  // a u in Q for each monomial
};

VertexSetC vertex_set_C(const AffineSemigroup& s, const IntegerVector& a);
SimplicialComplex build_T(const AffineSemigroup& s, const IntegerVector& a);
SimplicialComplex build_Gamma(const AffineSemigroup& s, const IntegerVector& a);
SimplicialComplex build_Delta(const AffineSemigroup& s, const IntegerVector& a);

// dim H~_i(Gamma_a): i = -1 counts module generators, i = 0 minimal
// relations of the presentation over k[Y].
std::size_t betti_at_degree(const AffineSemigroup& s, const IntegerVector& a, int i,
                            Field field = Field::rationals());

struct NerveRow {
  int i = 0;
  std::size_t gamma = 0;
  std::size_t t = 0;
  bool equal() const { return gamma == t; }
};

std::vector<NerveRow> nerve_check(const AffineSemigroup& s, const IntegerVector& a, int i_max,
                                  Field field = Field::rationals());

struct TransferRow {
  std::vector<std::size_t> F;  // input indices of generators in B
  IntegerVector degree;        // a - sum F
  int index = 0;               // i - #F, at least -1
  std::size_t value = 0;       // dim H~_index(Gamma_degree)

  // Index -1 is the generator layer, not a syzygy; the implication does not
  // constrain it.
  bool vacuous() const { return index < 0; }
};

// The implication "dim H~_i(Delta_a) = 0 => dim H~_{i-#F}(Gamma_{a - sum F})
// = 0 for every F in B with #F <= i + 1, i - #F >= 0" (pass), and its
// converse "dim H~_i(Delta_a) != 0 => some row is nonzero" (containment),
// where the converse does count index -1 rows.
struct TransferReport {
  IntegerVector a;
  int i = 0;
  std::size_t hypothesis_value = 0;  // dim H~_i(Delta_a)
  std::vector<TransferRow> rows;

  bool hypothesis() const { return hypothesis_value == 0; }
  bool pass() const;
  bool containment() const;
};

TransferReport vanishing_transfer_check(const AffineSemigroup& s, const IntegerVector& a, int i,
                                        Field field = Field::rationals());

// All degrees a = deg(Z^u Y^v) with u in Q and lambda(a) <= bound, i.e. the
// elements of S up to the bound, sorted by lambda then coordinates.
std::vector<IntegerVector> elements_up_to(const AffineSemigroup& s, const Rational& bound);

}  // namespace sgalg
