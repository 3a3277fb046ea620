#include "sgalg/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "sgalg/error.hpp"

namespace sgalg {

namespace {

// Leads of a growing binomial list with cheap divisibility prefilters.
class LeadIndex {
 public:
  void add(const Binomial& b, std::int64_t lead_weight) {
    elements_.push_back(b);
    masks_.push_back(b.lead.support_mask());
    weights_.push_back(lead_weight);
  }

  std::size_t size() const { return elements_.size(); }
  const Binomial& operator[](std::size_t i) const { return elements_[i]; }
  std::uint64_t mask(std::size_t i) const { return masks_[i]; }
  std::int64_t weight(std::size_t i) const { return weights_[i]; }

  std::optional<std::size_t> find(const Monomial& m, std::uint64_t m_mask,
                                   std::int64_t m_weight) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if ((masks_[i] & ~m_mask) != 0 || weights_[i] > m_weight) continue;
      if (elements_[i].lead.divides(m)) return i;
    }
    return std::nullopt;
  }

  Monomial reduce(Monomial m, const TermOrder& order) const {
    std::int64_t w = order.scaled_weight(m);
    for (;;) {
      auto hit = find(m, m.support_mask(), w);
      if (!hit) return m;
      const Binomial& g = elements_[*hit];
      m = (m / g.lead) * g.trail;
      w = order.scaled_weight(m);
    }
  }

 private:
  std::vector<Binomial> elements_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::int64_t> weights_;
};

struct CriticalPair {
  std::int64_t weight;  // scaled lambda-degree of the lcm
  std::size_t j;        // newer element
  std::size_t i;        // older element
  Monomial lcm;

  auto key() const { return std::tie(weight, j, i); }
  bool operator<(const CriticalPair& o) const { return key() < o.key(); }
};

bool strictly_divides(const Monomial& a, const Monomial& b) {
  return a.divides(b) && a != b;
}

class BuchbergerRun {
 public:
  BuchbergerRun(const TermOrder& order, const BuchbergerOptions& options)
      : order_(order), options_(options) {
    options_.saturated.resize(order.num_variables(), false);
  }

  void insert_generator(const Binomial& raw) {
    auto b = reduce(raw.lead, raw.trail);
    if (b) update(std::move(*b));
  }

  void run() {
    while (!pairs_.empty()) {
      CriticalPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Binomial& gi = basis_[p.i];
      const Binomial& gj = basis_[p.j];
      Monomial a = (p.lcm / gi.lead) * gi.trail;
      Monomial b = (p.lcm / gj.lead) * gj.trail;
      auto s = reduce(a, b);
      if (s) update(std::move(*s));
    }
  }

  GroebnerBasis finish() const {
    LeadIndex minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.add(basis_[k], basis_.weight(k));
    std::vector<Binomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Monomial t = minimal.reduce(minimal[k].trail, order_);
      out.push_back(Binomial{minimal[k].lead, std::move(t)});
    }
    std::sort(out.begin(), out.end(), [this](const Binomial& x, const Binomial& y) {
      return order_.less(x.lead, y.lead);
    });
    return GroebnerBasis(order_, std::move(out), true);
  }

 private:
  // Fully reduce both sides against everything found so far and strip the
  // common factor in saturated variables. Divisors of standard monomials are
  // standard, so stripping keeps the result reduced.
  std::optional<Binomial> reduce(const Monomial& a, const Monomial& b) const {
    Monomial ra = basis_.reduce(a, order_);
    Monomial rb = basis_.reduce(b, order_);
    auto bin = make_binomial(ra, rb, order_);
    if (!bin) return std::nullopt;
    return strip_common_factor(*bin, options_.saturated);
  }

  void update(Binomial h) {
    const std::size_t k = basis_.size();
    const Monomial& lh = h.lead;
    const std::uint64_t hmask = lh.support_mask();

    // New pairs, sorted so that divisibility chains are seen low to high.
    struct Candidate {
      CriticalPair pair;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      const Monomial& li = basis_[i].lead;
      Monomial l = Monomial::lcm(li, lh);
      std::int64_t w = order_.scaled_weight(l);
      fresh.push_back({CriticalPair{w, k, i, std::move(l)}, (basis_.mask(i) & hmask) == 0});
    }

    // Criterion M and F: drop (i,k) when another new pair has an lcm that
    // properly divides it, and keep a single pair per distinct lcm,
    // preferring a coprime one (which then kills the whole class).
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b) continue;
        if (strictly_divides(fresh[b].pair.lcm, fresh[a].pair.lcm)) drop = true;
      }
      if (drop) continue;
      bool seen = false;
      for (auto& c : kept) {
        if (c.pair.lcm == fresh[a].pair.lcm) {
          seen = true;
          c.coprime = c.coprime || fresh[a].coprime;
          break;
        }
      }
      if (!seen) kept.push_back(fresh[a]);
    }

    // Criterion B on the old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& lij = it->lcm;
      if (lh.divides(lij)) {
        Monomial lik = Monomial::lcm(basis_[it->i].lead, lh);
        Monomial ljk = Monomial::lcm(basis_[it->j].lead, lh);
        if (lik != lij && ljk != lij) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }

    for (auto& c : kept)
      if (!c.coprime) pairs_.insert(std::move(c.pair));

    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && (hmask & ~basis_.mask(i)) == 0 && lh.divides(basis_[i].lead))
        active_[i] = false;

    std::int64_t hw = order_.scaled_weight(lh);
    basis_.add(h, hw);
    active_.push_back(true);
  }

  const TermOrder& order_;
  BuchbergerOptions options_;
  LeadIndex basis_;
  std::vector<bool> active_;
  std::set<CriticalPair> pairs_;
};

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(TermOrder order, std::vector<Binomial> elements, bool reduced)
    : order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {
  for (const auto& b : elements_) {
    masks_.push_back(b.lead.support_mask());
    weights_.push_back(order_.scaled_weight(b.lead));
  }
}

std::optional<std::size_t> GroebnerBasis::find_reducer(const Monomial& m) const {
  const std::uint64_t mm = m.support_mask();
  const std::int64_t w = order_.scaled_weight(m);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((masks_[i] & ~mm) != 0 || weights_[i] > w) continue;
    if (elements_[i].lead.divides(m)) return i;
  }
  return std::nullopt;
}

Monomial GroebnerBasis::normal_form(const Monomial& m) const {
  Monomial cur = m;
  for (;;) {
    auto hit = find_reducer(cur);
    if (!hit) return cur;
    const Binomial& g = elements_[*hit];
    cur = (cur / g.lead) * g.trail;
  }
}

std::optional<Binomial> GroebnerBasis::normal_form(const Binomial& b) const {
  return make_binomial(normal_form(b.lead), normal_form(b.trail), order_);
}

bool GroebnerBasis::contains(const Monomial& a, const Monomial& b) const {
  return normal_form(a) == normal_form(b);
}

std::vector<Monomial> GroebnerBasis::initial_ideal() const {
  std::vector<Monomial> leads;
  leads.reserve(elements_.size());
  for (const auto& b : elements_) leads.push_back(b.lead);
  return leads;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) { return gb.initial_ideal(); }

// ---------------------------------------------------------------------------

GroebnerBasis buchberger(const std::vector<Binomial>& generators, const TermOrder& order,
                         const BuchbergerOptions& options) {
  for (const auto& g : generators)
    if (g.lead.size() != order.num_variables() || g.trail.size() != order.num_variables())
      throw Error(ErrorCode::InvalidArgument, "binomial has the wrong number of variables");
  // Feed generators in increasing degree so early pairs are cheap.
  std::vector<Binomial> sorted;
  for (const auto& g : generators)
    if (auto b = make_binomial(g.lead, g.trail, order)) sorted.push_back(*b);
  std::stable_sort(sorted.begin(), sorted.end(), [&order](const Binomial& x, const Binomial& y) {
    return order.less(x.lead, y.lead);
  });
  BuchbergerRun run(order, options);
  for (const auto& g : sorted) run.insert_generator(g);
  run.run();
  return run.finish();
}

std::vector<Binomial> minimalize(const std::vector<Binomial>& generators,
                                 const TermOrder& order) {
  std::vector<std::pair<std::int64_t, Binomial>> keyed;
  for (const auto& g : generators)
    if (auto b = make_binomial(g.lead, g.trail, order))
      keyed.emplace_back(order.scaled_weight(b->lead), *b);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Binomial> kept;
  for (auto& [w, b] : keyed) {
    if (!kept.empty()) {
      GroebnerBasis gb = buchberger(kept, order);
      if (gb.contains(b)) continue;
    }
    kept.push_back(std::move(b));
  }
  return kept;
}

std::vector<Binomial> eliminate(const std::vector<Binomial>& generators,
                                const TermOrder& order,
                                const std::vector<std::size_t>& block,
                                const BuchbergerOptions& options) {
  TermOrder elim = order.eliminating(block);
  GroebnerBasis gb = buchberger(generators, elim, options);
  std::vector<Binomial> out;
  for (const auto& b : gb.elements()) {
    bool free = true;
    for (std::size_t v : block)
      if (b.lead[v] != 0 || b.trail[v] != 0) free = false;
    if (!free) continue;
    // Re-orient under the original order.
    if (auto r = make_binomial(b.lead, b.trail, order)) out.push_back(*r);
  }
  return out;
}

}  // namespace sgalg
