#pragma once

// Toric ideals from lattice ideals by Hosten-Sturmfels saturation.

#include <vector>

#include "sgalg/groebner.hpp"
#include "sgalg/linalg.hpp"
#include "sgalg/monomial.hpp"

namespace sgalg {

// x^{v+} - x^{v-} for every nonzero v, oriented by `order`.
std::vector<Binomial> lattice_ideal(const std::vector<IntegerVector>& kernel_basis,
                                    const TermOrder& order);

// Generators of I_L : (x_1 ... x_n)^oo, one Gröbner pass per variable with
// that variable cheapest. The result is the reduced basis under `order`.
GroebnerBasis saturate_toric(const std::vector<Binomial>& lattice_generators,
                             const TermOrder& order);

// Reduced Gröbner basis of the toric ideal of the columns of `a` (already in
// variable layout order).
GroebnerBasis toric_groebner(const IntegerMatrix& a, const TermOrder& order);

}  // namespace sgalg
