#include "sgalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "sgalg/homology.hpp"
#include "sgalg/presentation.hpp"
#include "sgalg/semigroup.hpp"

#ifndef SGALG_VERSION
#define SGALG_VERSION "unknown"
#endif

namespace sgalg {

using json = nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t line, std::size_t column) {
  throw Error(ErrorCode::ParseError,
              what + " at line " + std::to_string(line) + ", column " + std::to_string(column));
}

Integer parse_integer_token(const std::string& token, std::size_t column) {
  std::string t = token;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t.empty()) parse_fail("empty number", 1, column);
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size() || !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
    parse_fail("expected an integer, found '" + t + "'", 1, column);
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t);
}

// Splits on `sep`, returning each piece with its 1-based starting column.
std::vector<std::pair<std::string, std::size_t>> split(const std::string& s, char sep,
                                                      std::size_t offset) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(begin, i - begin), offset + begin + 1);
      begin = i + 1;
    }
  }
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  for (auto& [tok, col] : split(text, ',', 0)) out.push_back(parse_integer_token(tok, col));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json integer_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json vector_json(const IntegerVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

json exponents_json(const Exponents& e) {
  json a = json::array();
  for (auto x : e) a.push_back(x);
  return a;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

std::string vector_text(const IntegerVector& v) {
  if (v.size() == 1) return v[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string variable_name(const AffineSemigroup& s, std::size_t k) {
  return k < s.s() ? "Z" + std::to_string(k + 1) : "Y" + std::to_string(k - s.s() + 1);
}

std::string monomial_text(const AffineSemigroup& s, const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!m[k]) continue;
    if (!out.empty()) out += "*";
    out += variable_name(s, k);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

Monomial z_monomial(const AffineSemigroup& s, const Exponents& u) {
  Exponents e = u;
  e.resize(s.num_generators(), 0);
  return Monomial(std::move(e));
}

Monomial y_monomial(const AffineSemigroup& s, const Exponents& v) {
  Exponents e(s.s(), 0);
  e.insert(e.end(), v.begin(), v.end());
  return Monomial(std::move(e));
}

std::string binomial_text(const AffineSemigroup& s, const Binomial& b) {
  return monomial_text(s, b.lead) + " - " + monomial_text(s, b.trail);
}

json binomial_json(const AffineSemigroup& s, const Binomial& b) {
  auto e = [](const Monomial& m) { return exponents_json(Exponents(m.exponents().begin(), m.exponents().end())); };
  return json{{"text", binomial_text(s, b)}, {"lead", e(b.lead)}, {"trail", e(b.trail)}};
}

json column_json(const AffineSemigroup& s, const SparseColumn& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"row", e.row}, {"sign", e.sign}, {"y", exponents_json(e.y)},
                       {"text", monomial_text(s, y_monomial(s, e.y))}});
  return json{{"degree", vector_json(c.degree)}, {"entries", entries}};
}

std::string column_text(const AffineSemigroup& s, const SparseColumn& c) {
  std::string out;
  std::size_t row = SIZE_MAX;
  for (const auto& e : c.entries) {
    std::string m = monomial_text(s, y_monomial(s, e.y));
    if (e.row != row) {
      if (row != SIZE_MAX) out += "; ";
      out += "row " + std::to_string(e.row + 1) + ": " + (e.sign > 0 ? "" : "-") + m;
      row = e.row;
    } else {
      out += (e.sign > 0 ? " + " : " - ") + m;
    }
  }
  return out + "   [degree " + vector_text(c.degree) + "]";
}

json input_json(const SemigroupInput& in) {
  json gens = json::array();
  for (const auto& g : in.generators) gens.push_back(vector_json(g));
  json doc{{"generators", gens}, {"field", in.field_char}, {"order", in.order}};
  if (in.E) doc["E"] = *in.E;
  if (!in.tie_break.empty()) doc["tie_break"] = in.tie_break;
  return doc;
}

IntegerVector parse_degree(const std::string& text, std::size_t d) {
  IntegerVector v = parse_integer_list(text);
  if (v.size() != d)
    throw Error(ErrorCode::ParseError, "degree '" + text + "' has " + std::to_string(v.size()) +
                                           " coordinates, expected " + std::to_string(d));
  return v;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::ParseError, "expected a rational number, found '" + text + "'");
  q.canonicalize();
  return q;
}

struct Options {
  std::string gens;
  std::string input;
  std::string partition;
  bool json_out = false;
  bool no_timing = false;
  std::uint64_t field = 0;
  std::size_t q_cap = 1'000'000;
  std::string bound;
  std::string degree;
  int index = 0;
  int max_index = 2;
  std::string m;
};

SemigroupInput load_input(const Options& o) {
  if (o.gens.empty() == o.input.empty())
    throw Error(ErrorCode::ParseError, "give exactly one of --gens or --input");
  SemigroupInput in;
  if (!o.gens.empty()) {
    in = parse_inline(o.gens);
  } else {
    std::ifstream f(o.input);
    if (!f) throw Error(ErrorCode::ParseError, "cannot read input file '" + o.input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    in = parse_json(ss.str());
  }
  if (!o.partition.empty()) {
    std::vector<std::size_t> e;
    for (const auto& x : parse_integer_list(o.partition)) {
      if (x < 0) throw Error(ErrorCode::ParseError, "E indices must be nonnegative");
      e.push_back(x.get_ui());
    }
    in.E = e;
  }
  if (o.field != 0) {
    if (!is_prime(o.field)) throw Error(ErrorCode::InvalidArgument, "--field must be 0 or a prime");
    in.field_char = o.field;
  }
  in.q_cap = o.q_cap;
  return in;
}

IntegerMatrix input_matrix(const SemigroupInput& in) {
  return IntegerMatrix::from_columns(in.generators, in.generators.front().size());
}

AffineSemigroup make_semigroup(const SemigroupInput& in) {
  SemigroupOptions opts;
  opts.q_cap = in.q_cap;
  opts.tie_break = in.tie_break;
  return AffineSemigroup(input_matrix(in), in.E, opts);
}

struct Outcome {
  json result;
  std::string text;
  int code = 0;
};

using Handler = std::function<Outcome(const SemigroupInput&, const Options&)>;

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Outcome cmd_apery(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  Outcome o;
  json list = json::array();
  std::string text;
  for (const auto& a : s.apery()) {
    list.push_back(vector_json(a));
    text += (text.empty() ? "" : ", ") + vector_text(a);
  }
  o.result = {{"E", s.E()}, {"apery", list}, {"size", list.size()}};
  o.text = text + "\n";
  return o;
}

Outcome cmd_frobenius(const SemigroupInput& in, const Options&) {
  require_numerical(input_matrix(in));
  SemigroupInput copy = in;
  copy.E.reset();
  AffineSemigroup s = make_semigroup(copy);
  Integer f = s.frobenius();
  Outcome o;
  o.result = {{"frobenius", integer_json(f)}, {"m", integer_json(s.generator(s.E().front())[0])}};
  o.text = f.get_str() + "\n";
  return o;
}

Outcome cmd_groebner(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  Outcome o;
  json list = json::array();
  std::vector<std::string> lines;
  for (const auto& b : s.groebner().elements()) {
    list.push_back(binomial_json(s, b));
    lines.push_back(binomial_text(s, b));
  }
  o.result = {{"groebner_basis", list}, {"size", list.size()}};
  o.text = join_lines(lines);
  return o;
}

Outcome cmd_initial(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  Outcome o;
  json list = json::array();
  std::vector<std::string> lines;
  for (const auto& m : s.groebner().initial_ideal()) {
    lines.push_back(monomial_text(s, m));
    list.push_back(lines.back());
  }
  o.result = {{"initial_ideal", list}, {"size", list.size()}};
  o.text = join_lines(lines);
  return o;
}

Outcome cmd_q_set(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  Outcome o;
  json list = json::array();
  std::vector<std::string> lines;
  for (const auto& u : s.standard_Q()) {
    std::string t = monomial_text(s, z_monomial(s, u));
    list.push_back({{"u", exponents_json(u)}, {"text", t}, {"degree", vector_json(s.deg_Z(u))}});
    lines.push_back(t);
  }
  o.result = {{"Q", list}, {"size", list.size()}};
  o.text = join_lines(lines);
  return o;
}

json presentation_json(const AffineSemigroup& s, const ModulePresentation& p) {
  json sigma = json::array(), mp = json::array(), n = json::array(), g = json::array();
  for (const auto& u : p.sigma) sigma.push_back(exponents_json(u));
  for (const auto& c : p.m_prime) mp.push_back(column_json(s, c));
  for (const auto& c : p.n) n.push_back(column_json(s, c));
  for (const auto& b : p.se_generators) g.push_back(binomial_json(s, b));
  return json{{"beta0", p.beta0()}, {"beta1", p.beta1()}, {"sigma", sigma}, {"M_prime", mp},
              {"N", n}, {"se_generators", g}, {"block_resolution", is_block_resolution(p)}};
}

Outcome cmd_presentation(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  ModulePresentation p = build_presentation(s);
  Outcome o;
  o.result = presentation_json(s, p);
  std::vector<std::string> lines;
  lines.push_back("beta0 = " + std::to_string(p.beta0()) + ", beta1 = " + std::to_string(p.beta1()));
  for (std::size_t i = 0; i < p.sigma.size(); ++i)
    lines.push_back("row " + std::to_string(i + 1) + ": " + monomial_text(s, z_monomial(s, p.sigma[i])));
  lines.push_back("M' (" + std::to_string(p.m_prime.size()) + " columns)");
  for (const auto& c : p.m_prime) lines.push_back("  " + column_text(s, c));
  lines.push_back("N (" + std::to_string(p.n.size()) + " columns)");
  for (const auto& c : p.n) lines.push_back("  " + column_text(s, c));
  o.text = join_lines(lines);
  return o;
}

Outcome cmd_verify(const SemigroupInput& in, const Options& opt) {
  AffineSemigroup s = make_semigroup(in);
  ModulePresentation p = build_presentation(s);
  std::optional<Rational> bound;
  if (!opt.bound.empty()) bound = parse_rational(opt.bound);
  VerificationReport r = verify_presentation(s, p, bound);
  Outcome o;
  json cf = json::array(), ef = json::array();
  for (const auto& d : r.composition_failures) cf.push_back(vector_json(d));
  for (const auto& d : r.exactness_failures) ef.push_back(vector_json(d));
  o.result = {{"ok", r.ok()}, {"bound", rational_string(r.bound)},
              {"degrees_checked", r.degrees_checked}, {"composition_zero", r.composition_zero},
              {"composition_failures", cf}, {"exactness_failures", ef}};
  o.text = std::string(r.ok() ? "presentation verified" : "VERIFICATION FAILED") + " up to lambda " +
           rational_string(r.bound) + " (" + std::to_string(r.degrees_checked) + " degrees)\n";
  for (const auto& d : r.composition_failures) o.text += "  psi0*psi1 != 0 at " + vector_text(d) + "\n";
  for (const auto& d : r.exactness_failures) o.text += "  ker != im at " + vector_text(d) + "\n";
  o.code = r.ok() ? 0 : 3;
  return o;
}

Outcome cmd_cm_check(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  bool cm = cm_check(s);
  bool oracle = cm_oracle(s);
  std::vector<IntegerVector> all, e;
  for (std::size_t i = 0; i < s.num_generators(); ++i) all.push_back(s.generator(i));
  for (std::size_t i : s.E()) e.push_back(s.generator(i));
  auto index = lattice_index(all, e);
  Outcome o;
  o.result = {{"cohen_macaulay", cm}, {"oracle", oracle}, {"Q_size", s.standard_Q().size()},
              {"lattice_index", index ? integer_json(*index) : json(nullptr)}};
  o.text = std::string(cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") + " (|Q| = " +
           std::to_string(s.standard_Q().size()) + ", lattice index = " +
           (index ? index->get_str() : std::string("infinite")) + ")\n";
  if (cm != oracle) {
    o.text += "oracle disagrees\n";
    o.code = 3;
  }
  return o;
}

Outcome cmd_regularity(const SemigroupInput& in, const Options&) {
  AffineSemigroup s = make_semigroup(in);
  Regularity r = regularity(s);
  Outcome o;
  o.result = {{"max_Q_degree", r.module_value}, {"max_Q_degree_plus_one", r.ideal_value}};
  o.text = "max |u| over Q: " + std::to_string(r.module_value) +
           "\nmax |u| over Q, plus one: " + std::to_string(r.ideal_value) + "\n";
  return o;
}

Outcome cmd_betti(const SemigroupInput& in, const Options& opt) {
  AffineSemigroup s = make_semigroup(in);
  IntegerVector a = parse_degree(opt.degree, s.dimension());
  std::size_t b = betti_at_degree(s, a, opt.index, Field{in.field_char});
  Outcome o;
  o.result = {{"degree", vector_json(a)}, {"index", opt.index}, {"betti", b}};
  o.text = std::to_string(b) + "\n";
  return o;
}

Outcome cmd_nerve_check(const SemigroupInput& in, const Options& opt) {
  AffineSemigroup s = make_semigroup(in);
  IntegerVector a = parse_degree(opt.degree, s.dimension());
  Outcome o;
  json rows = json::array();
  bool all = true;
  for (const auto& r : nerve_check(s, a, opt.max_index, Field{in.field_char})) {
    rows.push_back({{"i", r.i}, {"gamma", r.gamma}, {"T", r.t}, {"equal", r.equal()}});
    o.text += "i = " + std::to_string(r.i) + ": Gamma " + std::to_string(r.gamma) + ", T " +
              std::to_string(r.t) + (r.equal() ? "" : "  MISMATCH") + "\n";
    all = all && r.equal();
  }
  o.result = {{"degree", vector_json(a)}, {"rows", rows}, {"equal", all}};
  o.code = all ? 0 : 3;
  return o;
}

Outcome cmd_transfer_check(const SemigroupInput& in, const Options& opt) {
  AffineSemigroup s = make_semigroup(in);
  IntegerVector a = parse_degree(opt.degree, s.dimension());
  TransferReport r = vanishing_transfer_check(s, a, opt.index, Field{in.field_char});
  Outcome o;
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"F", row.F}, {"degree", vector_json(row.degree)}, {"index", row.index}, {"value", row.value},
                    {"vacuous", row.vacuous()}});
  o.result = {{"degree", vector_json(a)}, {"index", r.i}, {"hypothesis_value", r.hypothesis_value},
              {"hypothesis", r.hypothesis()}, {"rows", rows}, {"pass", r.pass()},
              {"converse_holds", r.containment()}};
  o.text = "dim H~_" + std::to_string(r.i) + "(Delta_a) = " + std::to_string(r.hypothesis_value) + "\n";
  for (const auto& row : r.rows) {
    std::string f;
    for (auto i : row.F) f += (f.empty() ? "" : ",") + std::to_string(i);
    o.text += "F = {" + f + "}: dim H~_" + std::to_string(row.index) + "(Gamma_" + vector_text(row.degree) +
              ") = " + std::to_string(row.value) + (row.vacuous() ? "  (not constrained)" : "") + "\n";
  }
  if (!r.hypothesis())
    o.text += "hypothesis fails; converse " + std::string(r.containment() ? "holds" : "FAILS") + "\n";
  else
    o.text += std::string(r.pass() ? "implication holds" : "implication FAILS") + "\n";
  o.code = r.pass() && r.containment() ? 0 : 3;
  return o;
}

Outcome cmd_oracle_apery(const SemigroupInput& in, const Options& opt) {
  IntegerMatrix a = input_matrix(in);
  require_numerical(a);
  std::vector<Integer> gens;
  for (std::size_t i = 0; i < a.cols(); ++i) gens.push_back(a(0, i));
  Integer m = opt.m.empty() ? *std::min_element(gens.begin(), gens.end()) : Integer(opt.m);
  Outcome o;
  json list = json::array();
  std::string text;
  for (const auto& x : apery_oracle_numerical(gens, m)) {
    list.push_back(integer_json(x));
    text += (text.empty() ? "" : ", ") + x.get_str();
  }
  o.result = {{"m", integer_json(m)}, {"apery", list}};
  o.text = text + "\n";
  return o;
}

}  // namespace

SemigroupInput parse_inline(const std::string& text) {
  SemigroupInput in;
  if (text.find(';') == std::string::npos) {
    for (auto& [tok, col] : split(text, ',', 0)) in.generators.push_back({parse_integer_token(tok, col)});
  } else {
    std::size_t d = 0;
    for (auto& [column, start] : split(text, ';', 0)) {
      IntegerVector g;
      for (auto& [tok, col] : split(column, ',', start - 1)) g.push_back(parse_integer_token(tok, col));
      if (d == 0) d = g.size();
      if (g.size() != d)
        parse_fail("column has " + std::to_string(g.size()) + " coordinates, expected " + std::to_string(d),
                   1, start);
      in.generators.push_back(std::move(g));
    }
  }
  if (in.generators.empty()) parse_fail("no generators", 1, 1);
  return in;
}

SemigroupInput parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    parse_fail("malformed JSON", line, col);
  }
  auto fail = [](const std::string& what) { parse_fail(what, 1, 1); };
  if (!doc.is_object() || !doc.contains("generators")) fail("JSON input needs a \"generators\" array");
  const json& gens = doc["generators"];
  if (!gens.is_array() || gens.empty()) fail("\"generators\" must be a nonempty array");
  auto integer_of = [&](const json& x) -> Integer {
    if (x.is_number_integer()) return x.is_number_unsigned() ? Integer(x.get<std::uint64_t>())
                                                             : Integer(static_cast<long>(x.get<std::int64_t>()));
    if (x.is_string()) return parse_integer_token(x.get<std::string>(), 1);
    parse_fail("generator entries must be integers", 1, 1);
  };
  SemigroupInput in;
  std::size_t d = 0;
  for (const auto& g : gens) {
    IntegerVector v;
    if (g.is_array()) {
      for (const auto& x : g) v.push_back(integer_of(x));
    } else {
      v.push_back(integer_of(g));
    }
    if (d == 0) d = v.size();
    if (v.empty() || v.size() != d) fail("ragged generator columns");
    in.generators.push_back(std::move(v));
  }
  if (doc.contains("E") && !doc["E"].is_null()) {
    std::vector<std::size_t> e;
    for (const auto& x : doc["E"]) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
        fail("\"E\" must list nonnegative indices");
      e.push_back(x.get<std::size_t>());
    }
    in.E = e;
  }
  if (doc.contains("field")) {
    if (!doc["field"].is_number_unsigned()) fail("\"field\" must be 0 or a prime");
    in.field_char = doc["field"].get<std::uint64_t>();
    if (in.field_char != 0 && !is_prime(in.field_char)) fail("\"field\" must be 0 or a prime");
  }
  if (doc.contains("order") && doc["order"] != "a-graded-revlex")
    fail("the only supported order is \"a-graded-revlex\"");
  if (doc.contains("tie_break")) {
    for (const auto& row : doc["tie_break"]) {
      std::vector<std::int64_t> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) fail("\"tie_break\" rows must hold integers");
        r.push_back(x.get<std::int64_t>());
      }
      in.tie_break.push_back(std::move(r));
    }
  }
  return in;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailed:
      return 3;
    case ErrorCode::PartitionNotConic:
    case ErrorCode::CapExceeded:
    case ErrorCode::TooManyVertices:
    case ErrorCode::Overflow:
      return 4;
    default:
      return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for pointed affine semigroups", "sgalg"};
  app.set_version_flag("--version", SGALG_VERSION);
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
  };
  const std::vector<Command> commands = {
      {"apery", "Apery set relative to E", cmd_apery},
      {"frobenius", "Frobenius number of a numerical semigroup", cmd_frobenius},
      {"groebner", "reduced Groebner basis of the toric ideal", cmd_groebner},
      {"initial", "minimal generators of the initial ideal", cmd_initial},
      {"q-set", "standard set Q", cmd_q_set},
      {"presentation", "presentation (M' | N) over k[Y]", cmd_presentation},
      {"verify", "check the presentation degree by degree", cmd_verify},
      {"cm-check", "Cohen-Macaulay test for simplicial semigroups", cmd_cm_check},
      {"regularity", "max |u| over Q for CM, standard graded input", cmd_regularity},
      {"betti", "dim of reduced homology of Gamma_a", cmd_betti},
      {"nerve-check", "compare homology of Gamma_a and T_a", cmd_nerve_check},
      {"transfer-check", "vanishing transfer from Delta_a to Gamma", cmd_transfer_check},
      {"oracle-apery", "Apery set by brute force (numerical only)", cmd_oracle_apery},
  };

  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--gens", opt.gens, "inline generators: '8,11,18' or '6,1;6,3'");
    sub->add_option("--input", opt.input, "JSON input file");
    sub->add_option("-E,--partition", opt.partition, "0-based indices of E, comma separated");
    sub->add_flag("--json", opt.json_out, "print the JSON result document");
    sub->add_flag("--no-timing", opt.no_timing, "omit timing from JSON output");
    sub->add_option("--field", opt.field, "0 for Q, or a prime");
    sub->add_option("--q-cap", opt.q_cap, "enumeration cap for Q");
    std::string n = c.name;
    if (n == "verify") sub->add_option("--bound", opt.bound, "lambda-degree bound (rational)");
    if (n == "betti" || n == "nerve-check" || n == "transfer-check")
      sub->add_option("--degree", opt.degree, "degree a, comma separated")->required();
    if (n == "betti" || n == "transfer-check") sub->add_option("--index", opt.index, "homological index i");
    if (n == "nerve-check") sub->add_option("--max-index", opt.max_index, "largest i to compare");
    if (n == "oracle-apery") sub->add_option("--m", opt.m, "element to take the Apery set against");
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Command* chosen = nullptr;
  std::string name;
  for (auto& [sub, c] : subs)
    if (sub->parsed()) {
      chosen = c;
      name = c->name;
    }

  try {
    auto start = std::chrono::steady_clock::now();
    SemigroupInput in = load_input(opt);
    Outcome o = chosen->handler(in, opt);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.json_out) {
      json doc{{"command", name}, {"input", input_json(in)}, {"result", o.result},
               {"engine_version", SGALG_VERSION}, {"exit_code", o.code}};
      if (!opt.no_timing) doc["timing_ms"] = ms;
      out << doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const Error& e) {
    int code = exit_code_for(e.code());
    if (opt.json_out) {
      json doc{{"command", name}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}},
               {"engine_version", SGALG_VERSION}, {"exit_code", code}};
      out << doc.dump(2) << "\n";
    }
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return code;
  }
}

}  // namespace sgalg
