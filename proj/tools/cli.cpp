#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "affhecke/canonical.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/oracle/convolution.hpp"
#include "affhecke/oracle/flags.hpp"

namespace affhecke::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Element grammar

namespace {

class ElementParser {
 public:
  ElementParser(int n, const std::string& text) : n_(n), s_(text) {}

  HeckeElt parse() {
    HeckeElt h = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return h;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("element '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  // Text up to the matching close bracket, which is consumed.
  std::string bracketed(char open, char close) {
    expect(open);
    int depth = 1;
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      if (s_[pos_] == open) ++depth;
      if (s_[pos_] == close && --depth == 0) return s_.substr(start, pos_++ - start);
      ++pos_;
    }
    fail(std::string("missing '") + close + "'");
  }

  HeckeElt power(const HeckeElt& base) {
    if (peek() != '^') return base;
    ++pos_;
    const long long k = integer(false);
    if (k > 64) fail("exponent too large");
    HeckeElt out(n_, 1);
    for (long long i = 0; i < k; ++i) out = out * base;
    return out;
  }

  HeckeElt sum() {
    HeckeElt total(n_);
    bool first = true;
    while (true) {
      const char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        return total;
      }
      HeckeElt term = product();
      total += negate ? -term : term;
      first = false;
    }
  }

  HeckeElt product() {
    HeckeElt h = factor();
    while (peek() == '*') {
      ++pos_;
      h = h * factor();
    }
    return h;
  }

  HeckeElt factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      HeckeElt inner = sum();
      expect(')');
      return power(inner);
    }
    if (c == 'T') {
      ++pos_;
      if (peek() == '[') return HeckeElt::basis(parse_word(n_, bracketed('[', ']')).evaluate());
      if (peek() == '(') {
        const AffinePerm w = parse_window(bracketed('(', ')'));
        if (w.rank() != n_) fail("window of rank " + std::to_string(w.rank()) + " in a rank " + std::to_string(n_) + " element");
        return HeckeElt::basis(w);
      }
      fail("expected T[word] or T(w[...])");
    }
    if (c == 'X') {
      ++pos_;
      const long long i = integer(false);
      if (i < 1 || i > n_) fail("X index out of range");
      return power(x_element(n_, static_cast<int>(i)));
    }
    if (c == 'v') {
      ++pos_;
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = static_cast<int>(integer(true));
      }
      return HeckeElt(n_, vpow(e));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return HeckeElt(n_, LaurentPoly(integer(false)));
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  int n_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

HeckeElt parse_element(int n, const std::string& text) {
  if (n < 1) throw ParseError("rank must be positive");
  return ElementParser(n, text).parse();
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

json to_json(const HeckeElt& h) {
  json j = json::array();
  for (const auto& [w, c] : h.terms()) j.push_back({{"window", w.window()}, {"coeffs", to_json(c)}});
  return j;
}

json to_json(const QuotientElt& z) { return {{"spec", z.spec().partitions()}, {"terms", to_json(z.rep())}}; }

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be a JSON object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + key + "'");
    }
    if (used != key.size()) throw ParseError("bad exponent key '" + key + "'");
    if (!value.is_number_integer()) throw ParseError("coefficient of v^" + key + " is not an integer");
    terms.emplace_back(e, value.get<std::int64_t>());
  }
  return LaurentPoly::from_terms(std::move(terms));
}

HeckeElt hecke_from_json(int n, const json& j) {
  if (!j.is_array()) throw ParseError("Hecke element must be a JSON array");
  HeckeElt h(n);
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("window") || !rec.contains("coeffs")) throw ParseError("term needs window and coeffs");
    std::vector<int> window;
    try {
      window = rec.at("window").get<std::vector<int>>();
    } catch (const json::exception&) {
      throw ParseError("window must be an integer array");
    }
    if (static_cast<int>(window.size()) != n) throw ParseError("window of the wrong rank");
    try {
      h.add_term(AffinePerm(window), laurent_from_json(rec.at("coeffs")));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return h;
}

QuotientElt quotient_from_json(int n, const json& j) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("terms")) throw ParseError("quotient element needs spec and terms");
  std::vector<Composition> parts;
  try {
    parts = j.at("spec").get<std::vector<Composition>>();
  } catch (const json::exception&) {
    throw ParseError("spec must be a list of partitions");
  }
  const HeckeElt rep = hecke_from_json(n, j.at("terms"));
  QuotientElt z = reduce(rep, IdealSpec(n, parts));
  if (z.rep() != rep) throw ParseError("quotient representative contains ideal terms");
  return z;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

AffinePerm parse_perm(int n, const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (trimmed.rfind("w[", 0) == 0) {
    const AffinePerm w = parse_window(trimmed);
    if (w.rank() != n) throw ParseError("window " + trimmed + " does not have rank " + std::to_string(n));
    return w;
  }
  return parse_word(n, text).evaluate();
}

IdealSpec parse_spec(int n, const std::vector<std::string>& lambdas) {
  std::vector<Composition> parts;
  for (const auto& text : lambdas) parts.push_back(parse_parts(text));
  return IdealSpec(n, parts);
}

json report_json(const oracle::Report& r) {
  json dims = json::object();
  for (const auto& [k, v] : r.dims) dims[k] = v;
  return {{"claim", r.claim}, {"status", r.ok ? "ok" : "failed"}, {"dims", dims}, {"mismatches", r.mismatches}};
}

struct Options {
  bool json = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
};

int emit_report(const oracle::Report& r, const Options& opt, std::ostream& buf) {
  if (opt.json)
    buf << report_json(r).dump() << "\n";
  else
    buf << r.to_text();
  return r.ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact affine Hecke algebra computations and finite-field flag oracles", "affhecke"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::uint64_t seed_value = 0;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--threads", opt.threads, "Worker threads for oracle sweeps")->check(CLI::Range(1U, 256U));
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for randomized drivers");

  int n = 0;
  auto add_rank = [&](CLI::App* sub) { sub->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 12)); };

  std::vector<std::string> elements;
  std::string element;
  std::vector<std::string> lambdas;

  auto* mul_cmd = app.add_subcommand("mul", "Product of Hecke elements");
  add_rank(mul_cmd);
  mul_cmd->add_option("elements", elements, "Factors, left to right")->required();

  auto* word_cmd = app.add_subcommand("reduce-word", "Reduced word s_i1 ... s_ik rho^z");
  add_rank(word_cmd);
  word_cmd->add_option("element", element, "w[...] or a word")->required();

  auto* pos_cmd = app.add_subcommand("positive-word", "Reduced word over s_1..s_{n-1}, rho^-1");
  add_rank(pos_cmd);
  pos_cmd->add_option("element", element, "w[...] or a word")->required();

  int max_length = 0, min_degree = 0;
  bool tsv = false;
  auto* can_cmd = app.add_subcommand("canonical", "Canonical basis of the positive part or a quotient");
  add_rank(can_cmd);
  can_cmd->add_option("--max-length", max_length, "Length bound")->check(CLI::NonNegativeNumber);
  can_cmd->add_option("--min-degree", min_degree, "Lowest degree (<= 0)")->check(CLI::Range(-64, 0));
  can_cmd->add_option("--lambda", lambdas, "Ideal partition, repeatable")->allow_extra_args(false);
  can_cmd->add_flag("--tsv", tsv, "Table with columns window, x-window, coefficient");

  auto* mem_cmd = app.add_subcommand("ideal-member", "Whether w indexes the ideal");
  add_rank(mem_cmd);
  mem_cmd->add_option("--lambda", lambdas, "Ideal partition, repeatable")->required()->allow_extra_args(false);
  mem_cmd->add_option("element", element, "w[...] or a word")->required();

  auto* qmul_cmd = app.add_subcommand("quotient-mul", "Product in the quotient by an ideal");
  add_rank(qmul_cmd);
  qmul_cmd->add_option("--lambda", lambdas, "Ideal partition, repeatable")->required()->allow_extra_args(false);
  qmul_cmd->add_option("elements", elements, "Factors, left to right")->required();

  int q = 2, d = 0, trials = 50;
  auto* oracle_cmd = app.add_subcommand("oracle", "Finite-field flag variety verifications");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->fallthrough();
  auto add_field = [&](CLI::App* sub) {
    add_rank(sub);
    sub->add_option("--q", q, "Field size")->check(CLI::IsMember({2, 3}));
  };
  auto* hecke_cmd = oracle_cmd->add_subcommand("hecke", "Structure constants of C(X x X) against T-basis products");
  add_field(hecke_cmd);
  hecke_cmd->add_flag("--tsv", tsv, "Dump the structure constants as TSV");
  auto* bic_cmd = oracle_cmd->add_subcommand("bicommutant", "Bicommutant maps for C(Y x X)");
  add_field(bic_cmd);
  bic_cmd->add_option("--d", d, "Number of steps of Y")->required()->check(CLI::Range(1, 6));
  auto* lift_cmd = oracle_cmd->add_subcommand("lift", "Seeded lifting trials for compatible theta families");
  add_field(lift_cmd);
  lift_cmd->add_option("--d", d, "Number of steps of Y")->required()->check(CLI::Range(1, 6));
  lift_cmd->add_option("--trials", trials, "Number of random families")->check(CLI::Range(1, 100000));
  auto* psi_cmd = oracle_cmd->add_subcommand("psi", "Image of psi_i for every component of Y");
  add_field(psi_cmd);
  psi_cmd->add_option("--d", d, "Number of steps of Y")->required()->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (seed_opt->count() > 0) opt.seed = seed_value;

  std::ostringstream buf;
  int status = kOk;
  try {
    if (mul_cmd->parsed() || qmul_cmd->parsed()) {
      HeckeElt product(n, 1);
      for (const auto& text : elements) product = product * parse_element(n, text);
      if (mul_cmd->parsed()) {
        if (opt.json)
          buf << json{{"n", n}, {"result", to_json(product)}}.dump() << "\n";
        else
          buf << product.to_string() << "\n";
      } else {
        const IdealSpec spec = parse_spec(n, lambdas);
        // The quotient map is multiplicative, so reducing once at the end is enough.
        const QuotientElt z = reduce(product, spec);
        if (opt.json)
          buf << json{{"n", n}, {"result", to_json(z)}}.dump() << "\n";
        else
          buf << z.to_string() << "\n";
      }
    } else if (word_cmd->parsed() || pos_cmd->parsed()) {
      const AffinePerm w = parse_perm(n, element);
      const Word word = word_cmd->parsed() ? reduced_word(w) : positive_reduced_word(w);
      if (opt.json)
        buf << json{{"window", w.window()}, {"word", word.to_string()}, {"length", w.length()}, {"degree", w.degree()}}.dump()
            << "\n";
      else
        buf << word.to_string() << "\n";
    } else if (can_cmd->parsed()) {
      const int max_neg = -min_degree;
      if (tsv) buf << "window\tx-window\tcoefficient\n";
      auto emit = [&](const AffinePerm& w, const HeckeElt& value, const json& extra) {
        if (tsv) {
          for (const auto& [x, c] : value.terms()) buf << w << "\t" << x << "\t" << c << "\n";
        } else if (opt.json) {
          json rec = {{"window", w.window()}, {"terms", to_json(value)}};
          rec.update(extra);
          buf << rec.dump() << "\n";
        } else {
          buf << w << "\t" << value << "\n";
        }
      };
      if (lambdas.empty()) {
        for (const auto& b : positive_canonical_basis(n, max_length, max_neg)) emit(b.index, b.value, json::object());
      } else {
        const IdealSpec spec = parse_spec(n, lambdas);
        for (const auto& b : quotient_canonical_basis(spec, max_length, max_neg))
          emit(b.index, b.value.rep(), {{"spec", spec.partitions()}});
      }
    } else if (mem_cmd->parsed()) {
      const IdealSpec spec = parse_spec(n, lambdas);
      const AffinePerm w = parse_perm(n, element);
      const bool member = in_ideal(w, spec);
      if (opt.json)
        buf << json{{"window", w.window()}, {"spec", spec.partitions()}, {"member", member}}.dump() << "\n";
      else
        buf << (member ? "true" : "false") << "\n";
    } else if (hecke_cmd->parsed()) {
      oracle::require_small(n, q);
      if (tsv) {
        oracle::Geometry geo(n, q, opt.threads);
        buf << "row-orbit\tcol-orbit\tresult-orbit\tcoefficient\n";
        for (const auto& e : oracle::hecke_structure_table(geo))
          buf << e.row << "\t" << e.col << "\t" << e.result << "\t" << e.coefficient << "\n";
      } else {
        status = emit_report(oracle::verify_hecke_iso(n, q, opt.threads), opt, buf);
      }
    } else if (bic_cmd->parsed()) {
      status = emit_report(oracle::bicommutant_check(n, d, q, opt.threads), opt, buf);
    } else if (psi_cmd->parsed()) {
      status = emit_report(oracle::psi_image_check(n, d, q, opt.threads), opt, buf);
    } else if (lift_cmd->parsed()) {
      if (!opt.seed) throw ParseError("oracle lift needs --seed");
      status = emit_report(oracle::lift_trials(n, d, q, trials, *opt.seed, opt.threads), opt, buf);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainMismatch& e) {
    err << "domain mismatch: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const OverflowError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  out << buf.str();
  return status;
}

}  // namespace affhecke::cli
