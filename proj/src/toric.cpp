#include "sgalg/toric.hpp"

#include <algorithm>

#include "sgalg/error.hpp"

namespace sgalg {

namespace {

Monomial::Exponent to_exponent(const Integer& x) {
  if (!mpz_fits_sint_p(x.get_mpz_t()))
    throw Error(ErrorCode::Overflow, "kernel vector entry does not fit a monomial exponent");
  return static_cast<Monomial::Exponent>(x.get_si());
}

}  // namespace

std::vector<Binomial> lattice_ideal(const std::vector<IntegerVector>& kernel_basis,
                                    const TermOrder& order) {
  const std::size_t n = order.num_variables();
  std::vector<Binomial> out;
  for (const auto& v : kernel_basis) {
    if (v.size() != n) throw Error(ErrorCode::InvalidArgument, "kernel vector has wrong length");
    std::vector<Monomial::Exponent> plus(n, 0), minus(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > 0) plus[i] = to_exponent(v[i]);
      if (v[i] < 0) minus[i] = to_exponent(-v[i]);
    }
    if (auto b = make_binomial(Monomial(std::move(plus)), Monomial(std::move(minus)), order))
      out.push_back(std::move(*b));
  }
  return out;
}

// Every intermediate ideal J satisfies I_L <= J <= I_A, and I_A is prime and
// contains no monomials, so dividing a common variable factor out of any
// binomial never leaves I_A. Passes may therefore strip freely.
GroebnerBasis saturate_toric(const std::vector<Binomial>& lattice_generators,
                             const TermOrder& order) {
  const std::size_t n = order.num_variables();
  const auto opts = BuchbergerOptions::all_saturated(n);
  std::vector<Binomial> current = lattice_generators;
  for (std::size_t i = 0; i < n; ++i) {
    // A variable absent from every generator cannot be a zero divisor.
    bool occurs = std::any_of(current.begin(), current.end(),
                              [i](const Binomial& b) { return b.lead[i] != 0 || b.trail[i] != 0; });
    if (!occurs) continue;
    TermOrder pass = order.with_cheapest(i);
    GroebnerBasis gb = buchberger(current, pass, opts);
    // With x_i last in revlex and A-homogeneous binomials, x_i never has a
    // larger power in the lead than in the trail, so dividing by the lead's
    // power yields a basis of the colon ideal.
    current.clear();
    for (const auto& b : gb.elements()) {
      Monomial::Exponent k = std::min(b.lead[i], b.trail[i]);
      if (k == 0) {
        current.push_back(b);
        continue;
      }
      Monomial xk = Monomial::variable(n, i, k);
      current.push_back(Binomial{b.lead / xk, b.trail / xk});
    }
  }
  return buchberger(current, order, opts);
}

GroebnerBasis toric_groebner(const IntegerMatrix& a, const TermOrder& order) {
  return saturate_toric(lattice_ideal(integer_kernel_basis(a), order), order);
}

}  // namespace sgalg
