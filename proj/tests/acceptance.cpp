// Acceptance run: one PASS/FAIL line per criterion on stdout, diagnostics
// on stderr. Exit status is the number of failed criteria. With
// --known-failure 6d a criterion 6 failure confined to part (d) still prints
// FAIL but is not counted in the exit status.

#include <chrono>
#include <functional>
#include <set>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sgalg/cli.hpp"
#include "sgalg/error.hpp"
#include "sgalg/homology.hpp"
#include "sgalg/presentation.hpp"

using namespace sgalg;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  std::set<char> failed_parts;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      std::cerr << "  failed: " << what << "\n";
    }
  }
};

SemigroupInput load(const std::string& name) {
  std::ifstream f(std::string(SGALG_FIXTURES) + "/" + name + ".json");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_json(ss.str());
}

AffineSemigroup make(const SemigroupInput& in) {
  SemigroupOptions opts;
  opts.tie_break = in.tie_break;
  return AffineSemigroup(IntegerMatrix::from_columns(in.generators, in.generators.front().size()), in.E, opts);
}

// Parses "Z1^2*Y3" against a layout of s Z's followed by Y's.
Monomial parse_monomial(const std::string& text, std::size_t ns, std::size_t n) {
  std::vector<Monomial::Exponent> e(n, 0);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor == "1") continue;
    const char kind = factor[0];
    const auto caret = factor.find('^');
    const std::size_t index = std::stoul(factor.substr(1, caret - 1)) - 1;
    const int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    e.at(kind == 'Z' ? index : ns + index) += power;
  }
  return Monomial(e);
}

Binomial parse_binomial(const std::string& lhs, const std::string& rhs, const AffineSemigroup& s) {
  auto b = make_binomial(parse_monomial(lhs, s.s(), s.num_generators()),
                         parse_monomial(rhs, s.s(), s.num_generators()), s.order());
  return *b;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string vector_text(const IntegerVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].get_str();
  return out + ")";
}

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << x;
  return o.str();
}

void report(int number, const Check& c, const std::string& summary, int& failures, bool tolerated) {
  std::cout << "criterion " << number << ": " << (c.ok ? "PASS" : "FAIL") << "  " << summary;
  for (const auto& n : c.notes) std::cout << "; " << n;
  if (!c.ok && tolerated) std::cout << " [known failure, not counted in exit status]";
  std::cout << std::endl;
  if (!c.ok && !tolerated) ++failures;
}

Check criterion1() {
  Check c;
  AffineSemigroup s = make(load("numerical_8_11_18"));
  // layout: Z1 = 11, Z2 = 18, Y = 8
  c.expect(s.generator(s.generator_of_variable(0)) == IntegerVector{11}, "Z1 is 11");
  c.expect(s.generator(s.generator_of_variable(1)) == IntegerVector{18}, "Z2 is 18");
  c.expect(s.generator(s.generator_of_variable(2)) == IntegerVector{8}, "Y is 8");
  std::set<Binomial> expected{parse_binomial("Z1^2*Z2", "Y1^5", s), parse_binomial("Z1^4", "Z2^2*Y1", s),
                              parse_binomial("Z2^3", "Z1^2*Y1^4", s)};
  std::set<Binomial> got(s.groebner().elements().begin(), s.groebner().elements().end());
  c.expect(got == expected, "reduced Groebner basis");
  std::set<Exponents> q_expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {1, 2}};
  std::set<Exponents> q(s.standard_Q().begin(), s.standard_Q().end());
  c.expect(q == q_expected, "Q");
  std::vector<IntegerVector> ap{{0}, {11}, {18}, {22}, {29}, {33}, {36}, {47}};
  c.expect(s.apery() == ap, "Apery set");
  c.expect(s.frobenius() == 39, "Frobenius number 39");
  return c;
}

Check criterion2(double& elapsed) {
  Check c;
  auto t = std::chrono::steady_clock::now();
  AffineSemigroup s = make(load("numerical_15"));
  Integer f = s.frobenius();
  elapsed = seconds_since(t);
  c.expect(f == 11703, "Frobenius number 11703, got " + f.get_str());
  c.expect(elapsed < 60, "runtime under 60 s");
  return c;
}

Check criterion3() {
  Check c;
  AffineSemigroup s = make(load("block_4x7"));
  // layout: Z = b, Y1..Y6 = a1..a6
  std::vector<std::pair<std::string, std::string>> g_text{
      {"Y1*Y5", "Y3*Y6"}, {"Y1*Y3^3", "Y2*Y4*Y5^2"}, {"Y1^2*Y3^2", "Y2*Y4*Y5*Y6"}, {"Y1^3*Y3", "Y2*Y4*Y6^2"}};
  std::vector<Binomial> g;
  for (const auto& [l, r] : g_text) g.push_back(parse_binomial(l, r, s));
  std::vector<Binomial> listed = g;
  listed.push_back(parse_binomial("Z1^2", "Y3*Y4", s));
  GroebnerBasis listed_gb = buchberger(listed, s.order());
  for (const auto& b : s.groebner().elements()) c.expect(listed_gb.contains(b), "toric element in the listed ideal");
  for (const auto& b : listed) c.expect(s.groebner().contains(b), "listed generator in I_A");
  std::set<Exponents> q(s.standard_Q().begin(), s.standard_Q().end());
  c.expect(q == std::set<Exponents>{{0}, {1}}, "Q = {1, Z}");
  ModulePresentation p = build_presentation(s);
  c.expect(p.beta0() == 2, "beta0 = 2");
  c.expect(p.m_prime.empty(), "M' empty");
  c.expect(p.n.size() == 8, "N has 8 columns");
  if (p.n.size() == 8) {
    for (std::size_t j = 0; j < 8; ++j) {
      const std::size_t row = j / 4;
      const Binomial& gj = g[j % 4];
      auto y = [&](const Monomial& m) { return Exponents(m.exponents().begin() + 1, m.exponents().end()); };
      std::set<std::tuple<std::size_t, int, Exponents>> want{{row, 1, y(gj.lead)}, {row, -1, y(gj.trail)}};
      std::set<std::tuple<std::size_t, int, Exponents>> have, flipped;
      for (const auto& e : p.n[j].entries) {
        have.insert({e.row, e.sign, e.y});
        flipped.insert({e.row, -e.sign, e.y});
      }
      c.expect(have == want || flipped == want, "N column " + std::to_string(j + 1));
    }
  }
  c.expect(is_block_resolution(p), "block resolution");
  return c;
}

Check criterion4() {
  Check c;
  AffineSemigroup s = make(load("cm_2x9"));
  const char* listed[] = {"Z1^2", "Z1*Z2", "Z1*Z3", "Z2^2", "Z1*Z4", "Z2*Z3", "Z1*Z5", "Z3^2", "Z2*Z4",
                          "Z2*Z5", "Z1*Z6", "Z3*Z5", "Z4^2", "Z2*Z6", "Z1*Z7", "Z5^2", "Z3*Z6", "Z2*Z7",
                          "Z3*Z7", "Z4*Z7", "Z6^2", "Z5*Z7", "Z6*Z7", "Z7^2", "Z4*Z5*Z6"};
  std::set<Monomial> expected;
  for (const char* m : listed) expected.insert(parse_monomial(m, s.s(), s.num_generators()));
  auto leads = s.groebner().initial_ideal();
  std::set<Monomial> got(leads.begin(), leads.end());
  c.expect(expected.size() == 25, "25 listed monomials");
  c.expect(got == expected, "initial ideal equals the listed monomials");
  c.expect(cm_check(s), "cm_check");
  AffineSemigroup plain = make(load("cm_2x9_plain"));
  c.notes.push_back("without the matrix-order tie-break: " + std::to_string(plain.groebner().size()) +
                    " leads, cm_check " + (cm_check(plain) ? "true" : "false"));
  return c;
}

Check criterion5() {
  Check c;
  AffineSemigroup s = make(load("curve_non_cm"));
  std::vector<oracle::Vec> all{{4, 0}, {3, 1}, {1, 3}, {0, 4}}, e{{4, 0}, {0, 4}};
  // oracle values
  const std::size_t q_oracle = oracle::standard_Q(s).size();
  const std::int64_t index_oracle = oracle::lattice_index_2d(all, e);
  const std::size_t h0_oracle = oracle::reduced_homology(oracle::divisor_complex(all, {0, 3}, {6, 6}), 0);
  c.expect(q_oracle == 5 && index_oracle == 4 && h0_oracle == 1, "oracle values 5, 4, 1");
  c.expect(s.standard_Q().size() == 5, "|Q| = 5");
  std::vector<IntegerVector> gens, egens;
  for (std::size_t i = 0; i < 4; ++i) gens.push_back(s.generator(i));
  for (std::size_t i : s.E()) egens.push_back(s.generator(i));
  auto index = lattice_index(gens, egens);
  c.expect(index && *index == 4, "lattice index 4");
  c.expect(!cm_check(s), "cm_check false");
  c.expect(!cm_oracle(s), "cm_oracle false");
  ModulePresentation p = build_presentation(s);
  c.expect(p.m_prime.size() == 1 && p.m_prime[0].degree == IntegerVector{6, 6}, "one M' column in degree (6,6)");
  c.expect(betti_at_degree(s, {6, 6}, 0) == 1, "dim H~0(Gamma_(6,6)) = 1");
  return c;
}

struct Fixture {
  std::string name;
  Rational nerve_bound;
  Rational transfer_bound;
};

Check criterion6(std::string& summary) {
  Check c;
  std::mt19937 rng(20240601);
  const std::vector<Fixture> fixtures{{"numerical_8_11_18", 60, 20}, {"numerical_15", 60, 0},
                                      {"block_4x7", 10, 10},          {"cm_2x9", 60, 10},
                                      {"cm_2x9_plain", 60, 10},      {"curve_non_cm", 60, 20},
                                      {"conic", 60, 20}};
  std::vector<std::string> parts;
  // Runs one lettered part and prefixes its note with its own verdict.
  auto part = [&](char letter, const std::function<std::string()>& body) {
    const bool before = c.ok;
    c.ok = true;
    std::string note = body();
    if (!c.ok) c.failed_parts.insert(letter);
    parts.push_back(std::string("(") + letter + ") " + (c.ok ? "PASS" : "FAIL") + " " + note);
    c.ok = before && c.ok;
  };

  // (a) Apery bijection and oracle equivalence
  part('a', [&] {
    auto t = std::chrono::steady_clock::now();
    std::uniform_int_distribution<int> n(3, 5);
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      auto gens = oracle::random_numerical(rng, n(rng), 200);
      AffineSemigroup s(oracle::row_matrix(gens), std::nullopt);
      std::vector<Integer> ap;
      for (const auto& a : s.apery()) ap.push_back(a[0]);
      std::set<Integer> distinct(ap.begin(), ap.end());
      std::sort(ap.begin(), ap.end());
      const Integer m = s.generator(s.E().front())[0];
      const bool ok = distinct.size() == s.standard_Q().size() && ap == apery_oracle_numerical(gens, m);
      if (!ok) ++bad;
      c.expect(ok, "Apery set of random numerical semigroup " + std::to_string(k));
    }
    return "100 numerical, " + std::to_string(bad) + " bad, " + fmt(seconds_since(t)) + " s";
  });

  // (b) psi0 o psi1 = 0 and degreewise exactness
  std::vector<AffineSemigroup> randoms;
  part('b', [&] {
    auto t = std::chrono::steady_clock::now();
    std::size_t degrees = 0;
    for (const auto& f : fixtures) {
      AffineSemigroup s = make(load(f.name));
      VerificationReport r = verify_presentation(s, build_presentation(s));
      degrees += r.degrees_checked;
      c.expect(r.ok(), "verify on " + f.name);
    }
    std::uniform_int_distribution<int> dim(1, 2), num(2, 5);
    while (randoms.size() < 25) {
      const std::size_t d = dim(rng);
      auto cols = oracle::random_columns(rng, d, num(rng), 12);
      AffineSemigroup s(IntegerMatrix::from_columns(cols, d), std::nullopt);
      VerificationReport r = verify_presentation(s, build_presentation(s));
      degrees += r.degrees_checked;
      c.expect(r.ok(), "verify on random semigroup " + std::to_string(randoms.size()));
      randoms.push_back(std::move(s));
    }
    return std::to_string(fixtures.size()) + " fixtures + 25 random, " + std::to_string(degrees) + " degrees, " +
           fmt(seconds_since(t)) + " s";
  });

  // (c) nerve equality
  part('c', [&] {
    auto t = std::chrono::steady_clock::now();
    std::size_t degrees = 0;
    std::vector<std::string> scoped;
    for (const auto& f : fixtures) {
      AffineSemigroup s = make(load(f.name));
      if (f.nerve_bound != 60) scoped.push_back(f.name + " to lambda " + f.nerve_bound.get_str());
      for (const auto& a : elements_up_to(s, f.nerve_bound)) {
        ++degrees;
        for (const auto& row : nerve_check(s, a, 2))
          c.expect(row.equal(), "nerve equality on " + f.name + " at i = " + std::to_string(row.i));
      }
    }
    std::string note = "lambda <= 60, " + std::to_string(degrees) + " degrees";
    for (const auto& x : scoped) note += ", " + x;
    return note + ", " + fmt(seconds_since(t)) + " s";
  });

  // (d) vanishing transfer, and its converse as a diagnostic
  part('d', [&] {
    auto t = std::chrono::steady_clock::now();
    std::size_t cases = 0, with_hypothesis = 0, failed = 0, converse_failed = 0;
    std::string witness;
    auto run = [&](const AffineSemigroup& s, const Rational& bound, const std::string& name) {
      for (const auto& a : elements_up_to(s, bound))
        for (int i = 0; i <= 2; ++i) {
          TransferReport r = vanishing_transfer_check(s, a, i);
          ++cases;
          if (r.hypothesis()) ++with_hypothesis;
          if (!r.containment()) ++converse_failed;
          if (r.pass()) continue;
          ++failed;
          for (const auto& row : r.rows)
            if (!row.vacuous() && row.value != 0) {
              std::string f;
              for (auto k : row.F) f += (f.empty() ? "" : ",") + std::to_string(k);
              const std::string w = name + " a = " + vector_text(a) + " i = " + std::to_string(i) + " F = {" + f +
                                    "}: dim H~_" + std::to_string(row.index) + "(Gamma_" +
                                    vector_text(row.degree) + ") = " + std::to_string(row.value);
              std::cerr << "  transfer witness: " << w << "\n";
              if (witness.empty()) witness = w;
              break;
            }
        }
    };
    for (const auto& f : fixtures)
      if (f.transfer_bound > 0) run(make(load(f.name)), f.transfer_bound, f.name);
    for (std::size_t k = 0; k < randoms.size(); ++k) run(randoms[k], 6, "random " + std::to_string(k));
    c.expect(failed == 0, std::to_string(failed) + " transfer cases with acyclic Delta_a and nonzero Gamma homology");
    std::string note = std::to_string(cases) + " (a, i), " + std::to_string(with_hypothesis) + " with hypothesis, " +
                       std::to_string(failed) + " violations";
    if (!witness.empty()) note += " (first: " + witness + ")";
    note += ", converse violated " + std::to_string(converse_failed) + " times";
    return note + ", " + fmt(seconds_since(t)) + " s";
  });

  // (e) order laws and normal form idempotence
  part('e', [&] {
    auto t = std::chrono::steady_clock::now();
    std::size_t checks = 0;
    auto run = [&](const AffineSemigroup& s) {
      const TermOrder& order = s.order();
      const std::size_t n = s.num_generators();
      std::uniform_int_distribution<int> e(0, 3);
      auto random_monomial = [&] {
        std::vector<Monomial::Exponent> x(n);
        for (auto& v : x) v = e(rng);
        return Monomial(x);
      };
      for (int k = 0; k < 200; ++k) {
        Monomial x = random_monomial(), y = random_monomial(), z = random_monomial();
        auto xy = order.compare(x, y);
        bool ok = (xy == 0) == (x == y) && (0 <=> order.compare(y, x)) == xy &&
                  order.compare(x * z, y * z) == xy && (x.is_one() || order.less(Monomial(n), x));
        if (order.less(x, y) && order.less(y, z)) ok = ok && order.less(x, z);
        Monomial nf = s.groebner().normal_form(x);
        ok = ok && s.groebner().normal_form(nf) == nf && s.deg(nf) == s.deg(x) && !order.less(x, nf);
        c.expect(ok, "order laws / normal form");
        ++checks;
      }
    };
    for (const auto& f : fixtures) run(make(load(f.name)));
    for (const auto& s : randoms) run(s);
    return std::to_string(checks) + " samples, " + fmt(seconds_since(t)) + " s";
  });

  for (const auto& p : parts) summary += (summary.empty() ? "" : "; ") + p;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  bool allow_6d = false;
  for (int k = 1; k + 1 < argc; ++k)
    if (std::string(argv[k]) == "--known-failure" && std::string(argv[k + 1]) == "6d") allow_6d = true;
  int failures = 0;
  auto run = [&](int number, const std::function<Check(std::string&)>& body) {
    std::string summary;
    auto t = std::chrono::steady_clock::now();
    Check c;
    try {
      c = body(summary);
    } catch (const std::exception& e) {
      c.ok = false;
      summary = std::string("exception: ") + e.what();
    }
    if (summary.empty()) summary = fmt(seconds_since(t)) + " s";
    const bool tolerated = allow_6d && number == 6 && c.failed_parts == std::set<char>{'d'};
    report(number, c, summary, failures, tolerated);
  };
  run(1, [](std::string&) { return criterion1(); });
  run(2, [](std::string& s) {
    double elapsed = 0;
    Check c = criterion2(elapsed);
    s = "Frobenius number in " + fmt(elapsed) + " s";
    return c;
  });
  run(3, [](std::string&) { return criterion3(); });
  run(4, [](std::string&) { return criterion4(); });
  run(5, [](std::string&) { return criterion5(); });
  run(6, [](std::string& s) { return criterion6(s); });
  return failures;
}
