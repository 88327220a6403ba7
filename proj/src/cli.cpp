#include "cliffcat/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cliffcat/characters.h"
#include "cliffcat/clifford.h"
#include "cliffcat/euler.h"
#include "cliffcat/fock.h"
#include "cliffcat/glhalf.h"
#include "cliffcat/text.h"
#include "cliffcat/verify.h"

namespace cliffcat {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";

  std::string op;
  std::string index;
  std::string weight;
  std::string vector;
  std::string element;
  std::string fock;
  bool raw = false;

  std::string direction;

  std::string suite = "all";
  std::string bound = "11/2";
  std::size_t grade_max = 3;
  std::uint64_t seed = 1;
};

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

Json kvector_json(const KVector& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) out.push_back({{"coeff", integer_json(c)}, {"weight", format_weight(w)}});
  return out;
}

Json fock_json(const FockVector& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) {
    out.push_back({{"coeff", integer_json(c)}, {"monomial", format_monomial(m)}});
  }
  return out;
}

Json character_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"coeff", integer_json(it->second)}, {"exps", it->first}});
  }
  return {{"m", p.m()}, {"n", p.n()}, {"terms", terms}};
}

KVector weight_input(const Options& o) {
  if (!o.weight.empty() && !o.vector.empty()) throw UsageError("give only one of --weight and --vector");
  if (!o.vector.empty()) return parse_kvector(o.vector);
  if (o.weight.empty()) throw UsageError("--weight or --vector is required");
  if (!o.raw) return KVector(parse_dominant_weight(o.weight));
  SignedWeight s = normalize(parse_raw_weight(o.weight));
  if (!s) return KVector{};
  return KVector(s->second, s->first);
}

void print_kvector(const Options& o, const KVector& x, std::ostream& out) {
  if (o.format == "json") {
    out << kvector_json(x).dump() << "\n";
  } else {
    out << format_kvector(x) << "\n";
  }
}

void print_fock(const Options& o, const FockVector& x, std::ostream& out) {
  if (o.format == "json") {
    out << fock_json(x).dump() << "\n";
  } else {
    out << format_fock(x) << "\n";
  }
}

HalfInt required_index(const Options& o) {
  if (o.index.empty()) throw UsageError("--index is required");
  return HalfInt::parse(o.index);
}

int cmd_act(const Options& o, std::ostream& out) {
  if (!o.element.empty()) {
    if (!o.op.empty()) throw UsageError("--element and --op are exclusive");
    CliffordElement x = parse_clifford(o.element);
    FockVector f;
    if (!o.fock.empty()) {
      f = parse_fock(o.fock);
    } else {
      f = f_map(weight_input(o));
    }
    print_fock(o, act(x, f), out);
    return 0;
  }
  if (o.op != "gamma" && o.op != "eta") throw UsageError("--op must be gamma or eta");
  HalfInt a = required_index(o);
  KVector x = weight_input(o);
  print_kvector(o, o.op == "gamma" ? gamma(a, x) : eta(a, x), out);
  return 0;
}

int cmd_char(const Options& o, std::ostream& out) {
  if (o.weight.empty()) throw UsageError("--weight is required");
  LaurentPoly ch(0, 0);
  if (o.raw) {
    RawWeight rw = parse_raw_weight(o.weight);
    SignedWeight s = normalize(rw);
    if (s) {
      ch = euler_character(s->second);
      ch *= s->first;
    } else {
      ch = LaurentPoly(rw.a.size(), rw.b.size());
    }
  } else {
    ch = euler_character(parse_dominant_weight(o.weight));
  }
  if (o.format == "json") {
    out << character_json(ch).dump() << "\n";
  } else {
    out << format_character(ch) << "\n";
  }
  return 0;
}

int cmd_fock_map(const Options& o, std::ostream& out) {
  if (!o.fock.empty()) {
    print_kvector(o, f_inverse(parse_fock(o.fock)), out);
    return 0;
  }
  if (!o.weight.empty() && !o.raw) {
    WedgeMonomial m = f_map(parse_dominant_weight(o.weight));
    if (o.format == "json") {
      out << fock_json(FockVector(m)).dump() << "\n";
    } else {
      out << format_monomial(m) << "\n";
    }
    return 0;
  }
  print_fock(o, f_map(weight_input(o)), out);
  return 0;
}

int cmd_translate(const Options& o, std::ostream& out) {
  if (o.direction != "lower" && o.direction != "raise") {
    throw UsageError("--direction must be lower or raise");
  }
  HalfInt a = required_index(o);
  if (!a.positive()) throw UsageError("--index must be positive for translate");
  Direction dir = o.direction == "lower" ? Direction::lower : Direction::raise;
  print_kvector(o, translation_on_k(dir, a, weight_input(o)), out);
  return 0;
}

int cmd_block(const Options& o, std::ostream& out) {
  if (o.weight.empty()) throw UsageError("--weight is required");
  TWeight beta = t_weight(parse_dominant_weight(o.weight));
  Json offsets = Json::object();
  for (const auto& [a, k] : beta.offsets) offsets[a.str()] = k;
  out << offsets.dump() << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions opt;
  opt.bound = HalfInt::parse(o.bound);
  if (!opt.bound.positive()) throw UsageError("--bound must be positive");
  opt.grade_max = o.grade_max;
  opt.seed = o.seed;
  std::vector<VerifyReport> reports = run_suite(o.suite, opt);
  bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
  if (o.format == "json") {
    Json suites = Json::array();
    for (const auto& r : reports) {
      Json failures = Json::array();
      for (const auto& f : r.failures) {
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
      }
      suites.push_back({{"suite", r.suite},
                        {"cases", r.cases},
                        {"failures", failures},
                        {"wall_seconds", r.wall_seconds}});
    }
    out << Json{{"ok", ok}, {"suites", suites}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << format_report(r) << "\n";
    out << (ok ? "all suites passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_info(const Options& o, std::ostream& out) {
  HalfInt bound = HalfInt::parse(o.bound);
  if (!bound.positive()) throw UsageError("--bound must be positive");
  Json grades = Json::array();
  std::size_t total = 0;
  for (std::size_t m = 0; m <= o.grade_max; ++m) {
    for (std::size_t n = 0; n <= o.grade_max; ++n) {
      std::size_t count = dominant_weights(m, n, bound).size();
      total += count;
      RootData roots = positive_roots(m, n);
      RawWeight r = rho(m, n);
      Json rho_json = {{"epsilon", Json::array()}, {"delta", Json::array()}};
      for (HalfInt x : r.a) rho_json["epsilon"].push_back(x.str());
      for (HalfInt x : r.b) rho_json["delta"].push_back(x.str());
      grades.push_back({{"m", m},
                        {"n", n},
                        {"weights", count},
                        {"even_roots", roots.even},
                        {"odd_roots", roots.odd},
                        {"rho", rho_json}});
    }
  }
  if (o.format == "json") {
    out << Json{{"bound", bound.str()}, {"grade_max", o.grade_max}, {"total_weights", total}, {"grades", grades}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "bound " << bound.str() << ", grade-max " << o.grade_max << ", " << total << " dominant weights\n";
  for (const auto& g : grades) {
    out << "  (" << g["m"].get<std::size_t>() << "," << g["n"].get<std::size_t>()
        << "): " << g["weights"].get<std::size_t>() << " weights, " << g["even_roots"].size()
        << " even / " << g["odd_roots"].size() << " odd positive roots, rho = (";
    const auto& eps = g["rho"]["epsilon"];
    for (std::size_t i = eps.size(); i-- > 0;) out << eps[i].get<std::string>() << (i ? "," : "");
    out << "|";
    const auto& del = g["rho"]["delta"];
    for (std::size_t i = 0; i < del.size(); ++i) out << (i ? "," : "") << del[i].get<std::string>();
    out << ")\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fock space, Clifford action and Euler characters for SOSP(2m+1,2n)", "cliffcat"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_weight = [&](CLI::App* c) {
    c->add_option("--weight", o.weight, "Weight such as (5/2,3/2|1/2)");
    c->add_flag("--raw", o.raw, "Accept any half-integer entries and normalize");
  };

  CLI::App* act_cmd = app.add_subcommand("act", "Apply gamma/eta or a Clifford element");
  act_cmd->add_option("--op", o.op, "gamma or eta");
  act_cmd->add_option("--index", o.index, "Index p/2, sign selects the side");
  act_cmd->add_option("--vector", o.vector, "KVector such as \"+1*(3/2|) -2*(|1/2)\"");
  act_cmd->add_option("--element", o.element, "Clifford element such as \"v[3/2] w[-1/2]\"");
  act_cmd->add_option("--fock", o.fock, "Fock vector such as \"w[3/2 | -1/2]\"");
  add_weight(act_cmd);
  add_format(act_cmd);

  CLI::App* char_cmd = app.add_subcommand("char", "Character of an Euler class");
  add_weight(char_cmd);
  add_format(char_cmd);

  CLI::App* fock_cmd = app.add_subcommand("fock-map", "Image of a weight under f (or f^-1 with --fock)");
  fock_cmd->add_option("--vector", o.vector, "KVector");
  fock_cmd->add_option("--fock", o.fock, "Fock vector to pull back");
  add_weight(fock_cmd);
  add_format(fock_cmd);

  CLI::App* translate_cmd = app.add_subcommand("translate", "Translation operator on the Grothendieck group");
  translate_cmd->add_option("--direction", o.direction, "lower or raise");
  translate_cmd->add_option("--index", o.index, "Positive index a");
  translate_cmd->add_option("--vector", o.vector, "KVector");
  add_weight(translate_cmd);
  add_format(translate_cmd);

  CLI::App* block_cmd = app.add_subcommand("block", "t-weight offsets from the vacuum weight");
  block_cmd->add_option("--weight", o.weight, "Dominant weight");
  add_format(block_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"clifford", "intertwine", "adjoint", "characters", "koszul", "glhalf", "all"}));
  verify_cmd->add_option("--bound", o.bound, "Index and entry bound p/2");
  verify_cmd->add_option("--grade-max", o.grade_max, "Largest m and n");
  verify_cmd->add_option("--seed", o.seed, "Seed for the randomized checks");
  add_format(verify_cmd);

  CLI::App* info_cmd = app.add_subcommand("info", "Truncation sizes and root data");
  info_cmd->add_option("--bound", o.bound, "Entry bound p/2");
  info_cmd->add_option("--grade-max", o.grade_max, "Largest m and n");
  add_format(info_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (act_cmd->parsed()) return cmd_act(o, out);
    if (char_cmd->parsed()) return cmd_char(o, out);
    if (fock_cmd->parsed()) return cmd_fock_map(o, out);
    if (translate_cmd->parsed()) return cmd_translate(o, out);
    if (block_cmd->parsed()) return cmd_block(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (info_cmd->parsed()) return cmd_info(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cliffcat
