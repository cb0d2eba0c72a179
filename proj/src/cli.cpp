#include "gross/cli.hpp"

#include <cctype>
#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gross/error.hpp"
#include "gross/finite.hpp"
#include "gross/number.hpp"
#include "gross/primes.hpp"

namespace gross::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool ascii = false;
  bool machine = false;
  bool trace = false;
  std::string subcommand;
  std::vector<std::string> positionals;
  std::map<std::string, std::string> named;

  Style style() const { return ascii ? Style::Ascii : Style::Unicode; }
};

const std::set<std::string> kValueOptions = {
    "--lambda", "--p", "--m", "--count", "--m-start", "--at", "--bound", "--mmax", "--limit"};

Options parse_argv(const std::vector<std::string>& argv) {
  Options opts;
  bool only_positionals = false;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const std::string& arg = argv[i];
    if (!only_positionals) {
      if (arg == "--") {
        only_positionals = true;
        continue;
      }
      if (arg == "--ascii") { opts.ascii = true; continue; }
      if (arg == "--machine") { opts.machine = true; continue; }
      if (arg == "--trace") { opts.trace = true; continue; }
      if (kValueOptions.count(arg)) {
        if (i + 1 >= argv.size()) throw UsageError(arg + " requires a value");
        if (!opts.named.emplace(arg, argv[i + 1]).second) throw UsageError(arg + " given twice");
        ++i;
        continue;
      }
      if (arg.starts_with("--")) throw UsageError("unknown option " + arg);
    }
    // A leading single '-' is allowed: expressions may start with a minus.
    if (opts.subcommand.empty()) {
      opts.subcommand = arg;
    } else {
      opts.positionals.push_back(arg);
    }
  }
  return opts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(what + " expects an integer, got '" + text + "'");
  }
  return value;
}

const std::string& named_or_fail(const Options& opts, const std::string& key) {
  auto it = opts.named.find(key);
  if (it == opts.named.end()) throw UsageError("missing required option " + key);
  return it->second;
}

const std::string& positional_or_fail(const Options& opts, std::size_t index,
                                      const std::string& what) {
  if (opts.positionals.size() <= index) throw UsageError("missing " + what);
  return opts.positionals[index];
}

void expect_positionals(const Options& opts, std::size_t count) {
  if (opts.positionals.size() > count) {
    throw UsageError("unexpected argument '" + opts.positionals[count] + "'");
  }
}

json gross_json(const GrossNumber& x) {
  return json::parse(format(x, Style::Machine));
}

std::string replace_grossone(std::string text) {
  const std::string from = grossone_symbol(Style::Unicode);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, from.size(), from) == 0) {
      out += 'G';
      i += from.size();
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::string styled(std::string text, const Options& opts) {
  return opts.ascii ? replace_grossone(std::move(text)) : text;
}

std::string paren(const std::string& s) {
  if (s.find(' ') != std::string::npos || (!s.empty() && s.front() == '-')) return "(" + s + ")";
  return s;
}

LambdaCert lambda_or_fail(const std::string& expr) {
  GrossNumber value = eval_string(expr);
  auto cert = lambda_certify(value);
  if (!cert) {
    throw Error(ErrorKind::NotLambdaForm,
                format(value) + " is not a lambda form (need q*G^k with q > 0 and integer k >= 1)");
  }
  return *cert;
}

const char* rule_name(PrimalityVerdict::Rule rule) {
  switch (rule) {
    case PrimalityVerdict::Rule::R1: return "R1";
    case PrimalityVerdict::Rule::R2: return "R2";
    case PrimalityVerdict::Rule::Finite: return "Finite";
    case PrimalityVerdict::Rule::None: break;
  }
  return nullptr;
}

std::string verdict_line(const PrimalityVerdict& v, Style style) {
  switch (v.kind) {
    case PrimalityVerdict::Kind::Prime:
      switch (v.rule) {
        case PrimalityVerdict::Rule::R1: return "Prime (Theorem 1)";
        case PrimalityVerdict::Rule::R2: return "Prime (Lemma 2)";
        default: return "Prime (finite)";
      }
    case PrimalityVerdict::Kind::Composite:
      return "Composite: " + paren(format(v.witness, style)) + " * " + paren(format(v.cofactor, style));
    case PrimalityVerdict::Kind::NotInteger: return "NotInteger";
    case PrimalityVerdict::Kind::NotPositive: return "NotPositive";
    case PrimalityVerdict::Kind::Unknown: return "Unknown: " + v.reason;
  }
  return "?";
}

json verdict_json(const PrimalityVerdict& v) {
  json j;
  switch (v.kind) {
    case PrimalityVerdict::Kind::Prime: j["verdict"] = "Prime"; break;
    case PrimalityVerdict::Kind::Composite: j["verdict"] = "Composite"; break;
    case PrimalityVerdict::Kind::NotInteger: j["verdict"] = "NotInteger"; break;
    case PrimalityVerdict::Kind::NotPositive: j["verdict"] = "NotPositive"; break;
    case PrimalityVerdict::Kind::Unknown: j["verdict"] = "Unknown"; break;
  }
  if (const char* rule = rule_name(v.rule)) j["rule"] = rule;
  else j["rule"] = nullptr;
  if (v.kind == PrimalityVerdict::Kind::Composite) {
    j["witness"] = gross_json(v.witness);
    j["cofactor"] = gross_json(v.cofactor);
  } else {
    j["witness"] = nullptr;
    j["cofactor"] = nullptr;
  }
  if (v.kind == PrimalityVerdict::Kind::Unknown) j["reason"] = v.reason;
  else j["reason"] = nullptr;
  j["trace"] = v.trace;
  return j;
}

std::string machine_line(const json& j) {
  return j.dump() + "\n";
}

// --- subcommand handlers -------------------------------------------------

std::string cmd_eval(const Options& opts) {
  GrossNumber v = eval_string(positional_or_fail(opts, 0, "expression"));
  expect_positionals(opts, 1);
  if (opts.machine) return machine_line(gross_json(v));
  return format(v, opts.style()) + "\n";
}

std::string cmd_cmp(const Options& opts) {
  GrossNumber a = eval_string(positional_or_fail(opts, 0, "first expression"));
  GrossNumber b = eval_string(positional_or_fail(opts, 1, "second expression"));
  expect_positionals(opts, 2);
  const char* r = to_string(cmp(a, b));
  if (opts.machine) return machine_line(json{{"cmp", r}});
  return std::string(r) + "\n";
}

std::string cmd_classify(const Options& opts) {
  GrossNumber v = eval_string(positional_or_fail(opts, 0, "expression"));
  expect_positionals(opts, 1);
  PrimalityVerdict verdict = classify_prime(v);
  if (opts.machine) return machine_line(verdict_json(verdict));
  std::string out = styled(verdict_line(verdict, opts.style()), opts) + "\n";
  if (opts.trace) {
    for (const auto& step : verdict.trace) out += "  " + styled(step, opts) + "\n";
  }
  return out;
}

std::string cmd_shape(const Options& opts) {
  GrossNumber v = eval_string(positional_or_fail(opts, 0, "expression"));
  expect_positionals(opts, 1);
  ShapeClass s = classify_shape(v);
  if (opts.machine) {
    json j{{"is_zero", s.is_zero},
           {"is_finite", s.is_finite},
           {"is_purely_infinite", s.is_purely_infinite},
           {"has_infinitesimal", s.has_infinitesimal},
           {"is_simple", s.is_simple},
           {"is_compound", s.is_compound}};
    return machine_line(j);
  }
  std::vector<std::string> tags;
  if (s.is_zero) tags.push_back("zero");
  if (s.is_finite) tags.push_back("finite");
  if (s.is_purely_infinite) tags.push_back("purely infinite");
  if (s.has_infinitesimal) tags.push_back("has infinitesimal");
  tags.push_back(s.is_compound ? "compound" : "simple");
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) out += (i ? ", " : "") + tags[i];
  return out + "\n";
}

std::string cmd_decompose(const Options& opts) {
  GrossNumber v = eval_string(positional_or_fail(opts, 0, "expression"));
  expect_positionals(opts, 1);
  Decomposition d = decompose(v);
  if (opts.machine) {
    json j{{"infinite", gross_json(d.infinite_part)},
           {"finite", d.finite_part.to_fraction_string()},
           {"infinitesimal", gross_json(d.infinitesimal_part)}};
    return machine_line(j);
  }
  Style st = opts.style();
  return "infinite: " + format(d.infinite_part, st) + "\nfinite: " + d.finite_part.to_string() +
         "\ninfinitesimal: " + format(d.infinitesimal_part, st) + "\n";
}

std::string cmd_twins(const Options& opts) {
  expect_positionals(opts, 0);
  LambdaCert lambda = lambda_or_fail(named_or_fail(opts, "--lambda"));
  auto p = parse_number<std::uint64_t>(named_or_fail(opts, "--p"), "--p");
  auto m = parse_number<long long>(named_or_fail(opts, "--m"), "--m");
  TwinPair pair = make_twins(lambda, p, m);
  if (opts.machine) {
    json j{{"lower", gross_json(pair.lower)},
           {"upper", gross_json(pair.upper)},
           {"p", pair.p},
           {"m", pair.m},
           {"lower_trace", pair.lower_verdict.trace},
           {"upper_trace", pair.upper_verdict.trace}};
    return machine_line(j);
  }
  Style st = opts.style();
  std::string out = "lower: " + format(pair.lower, st) + "\n";
  if (opts.trace) {
    for (const auto& step : pair.lower_verdict.trace) out += "  " + styled(step, opts) + "\n";
  }
  out += "upper: " + format(pair.upper, st) + "\n";
  if (opts.trace) {
    for (const auto& step : pair.upper_verdict.trace) out += "  " + styled(step, opts) + "\n";
  }
  return out;
}

std::string cmd_enum(const Options& opts, bool with_companions) {
  expect_positionals(opts, 0);
  LambdaCert lambda = lambda_or_fail(named_or_fail(opts, "--lambda"));
  auto p = parse_number<std::uint64_t>(named_or_fail(opts, "--p"), "--p");
  auto count = parse_number<long long>(named_or_fail(opts, "--count"), "--count");
  if (count < 1) throw UsageError("--count must be at least 1");
  std::vector<GrossNumber> elements;
  if (with_companions) {
    elements = enumerate_B(lambda, p, static_cast<std::size_t>(count));
  } else {
    long long m_start = 1;
    if (auto it = opts.named.find("--m-start"); it != opts.named.end()) {
      m_start = parse_number<long long>(it->second, "--m-start");
    }
    elements = enumerate_A(lambda, p, static_cast<std::size_t>(count), m_start);
  }
  if (opts.machine) {
    json arr = json::array();
    for (const auto& e : elements) arr.push_back(gross_json(e));
    return machine_line(json{{"elements", arr}});
  }
  std::string out;
  for (const auto& e : elements) out += format(e, opts.style()) + "\n";
  return out;
}

std::string cmd_set_count(const Options& opts) {
  std::string name = positional_or_fail(opts, 0, "set name");
  expect_positionals(opts, 1);
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  SetId id;
  if (name == "naturals") id = SetId::Naturals;
  else if (name == "evens") id = SetId::Evens;
  else if (name == "odds") id = SetId::Odds;
  else if (name == "integers") id = SetId::Integers;
  else throw UsageError("unknown set '" + name + "' (expected naturals, evens, odds, integers)");
  GrossNumber v = set_count(id);
  if (opts.machine) return machine_line(gross_json(v));
  return format(v, opts.style()) + "\n";
}

std::string cmd_subst(const Options& opts) {
  GrossNumber v = eval_string(positional_or_fail(opts, 0, "expression"));
  expect_positionals(opts, 1);
  const std::string& at = named_or_fail(opts, "--at");
  auto t = Rational::from_string(at);
  if (!t) throw UsageError("--at expects a rational, got '" + at + "'");
  Rational r = eval_at(v, *t);
  if (opts.machine) return machine_line(json{{"value", r.to_fraction_string()}});
  return r.to_string() + "\n";
}

std::string cmd_finite_check(const Options& opts) {
  expect_positionals(opts, 0);
  auto bound = parse_number<unsigned long>(named_or_fail(opts, "--bound"), "--bound");
  auto p = parse_number<unsigned long>(named_or_fail(opts, "--p"), "--p");
  auto m_max = parse_number<long>(named_or_fail(opts, "--mmax"), "--mmax");
  if (bound < 1) throw UsageError("--bound must be at least 1");
  if (m_max < 0) throw UsageError("--mmax must be nonnegative");
  AnalogueReport report = finite_analogue_check(bound, p, m_max);
  if (opts.machine) {
    json cases = json::array();
    for (const auto& c : report.cases) {
      json jc{{"m", c.m}, {"passed", c.passed}, {"in_range", c.in_range}};
      if (c.offending_prime) jc["offending_prime"] = *c.offending_prime;
      else jc["offending_prime"] = nullptr;
      cases.push_back(jc);
    }
    return machine_line(json{{"B", report.bound}, {"p", report.p}, {"cases", cases}});
  }
  std::string out = "N = lcm(1.." + std::to_string(report.bound) + ")^2 = " + report.stand_in.get_str() + "\n";
  for (const auto& c : report.cases) {
    out += "m=" + std::to_string(c.m) + ": ";
    if (!c.in_range) {
      out += "skip (" + std::to_string(report.p) + "^" + std::to_string(2 * c.m + 1) +
             " exceeds the stand-in)";
    } else if (c.passed) {
      out += "pass";
    } else {
      out += "FAIL (offending prime " + std::to_string(*c.offending_prime) + ")";
    }
    out += "\n";
  }
  return out;
}

std::string cmd_sieve(const Options& opts) {
  expect_positionals(opts, 0);
  auto limit = parse_number<std::uint64_t>(named_or_fail(opts, "--limit"), "--limit");
  if (limit < 5) throw UsageError("--limit must be at least 5");
  auto pairs = twin_sieve(limit);
  if (opts.machine) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    return machine_line(json{{"pairs", arr}});
  }
  std::string out;
  for (const auto& [a, b] : pairs) {
    out += "(" + std::to_string(a) + ", " + std::to_string(b) + ")\n";
  }
  return out;
}

constexpr const char* kUsage =
    "usage: grossone [--ascii] [--machine] [--trace] <command> ...\n"
    "\n"
    "commands:\n"
    "  eval EXPR                  evaluate an expression\n"
    "  cmp EXPR EXPR              compare two expressions (Less/Equal/Greater)\n"
    "  classify EXPR              primality verdict with optional --trace\n"
    "  shape EXPR                 structural flags (finite, purely infinite, ...)\n"
    "  decompose EXPR             infinite / finite / infinitesimal split\n"
    "  twins --lambda EXPR --p P --m M\n"
    "                             twin prime pair lambda/p^(2m+1) -+ 1\n"
    "  enum-a --lambda EXPR --p P --count N [--m-start K]\n"
    "                             elements lambda/p^(2m+1)\n"
    "  enum-b --lambda EXPR --p P --count N\n"
    "                             prime pairs around each element\n"
    "  set-count NAME             measured size of naturals/evens/odds/integers\n"
    "  subst EXPR --at T          substitute grossone := T (positive rational)\n"
    "  finite-check --bound B --p P --mmax M\n"
    "                             finite stand-in check with N = lcm(1..B)^2\n"
    "  sieve --limit L            finite twin primes up to L\n"
    "  repl                       interactive session\n"
    "\n"
    "expressions: grossone is \"\xE2\x91\xA0\", \"G\", or \"grossone\"; exact rational\n"
    "arithmetic with + - * / ^ and decimals, e.g. \"3.1G^2 - G/2 + 1\".\n";

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult result;
  Options opts;
  try {
    opts = parse_argv(argv);
    if (opts.subcommand == "help" || opts.subcommand == "--help") {
      result.out = kUsage;
      return result;
    }
    if (opts.subcommand.empty()) {
      result.out = kUsage;
      result.exit_code = 3;
      result.err = "error: missing command\n";
      return result;
    }

    if (opts.subcommand == "eval") result.out = cmd_eval(opts);
    else if (opts.subcommand == "cmp") result.out = cmd_cmp(opts);
    else if (opts.subcommand == "classify") result.out = cmd_classify(opts);
    else if (opts.subcommand == "shape") result.out = cmd_shape(opts);
    else if (opts.subcommand == "decompose") result.out = cmd_decompose(opts);
    else if (opts.subcommand == "twins") result.out = cmd_twins(opts);
    else if (opts.subcommand == "enum-a") result.out = cmd_enum(opts, false);
    else if (opts.subcommand == "enum-b") result.out = cmd_enum(opts, true);
    else if (opts.subcommand == "set-count") result.out = cmd_set_count(opts);
    else if (opts.subcommand == "subst") result.out = cmd_subst(opts);
    else if (opts.subcommand == "finite-check") result.out = cmd_finite_check(opts);
    else if (opts.subcommand == "sieve") result.out = cmd_sieve(opts);
    else if (opts.subcommand == "repl") repl(std::cin, std::cout, std::cerr, opts.style());
    else throw UsageError("unknown command '" + opts.subcommand + "'");
  } catch (const UsageError& e) {
    result.exit_code = 3;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

void repl(std::istream& in, std::ostream& out, std::ostream& err, Style style) {
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };

  auto restyle = [&](std::string text) {
    return style == Style::Ascii ? replace_grossone(std::move(text)) : text;
  };

  std::string line;
  err << "grossone> " << std::flush;
  while (std::getline(in, line)) {
    std::string text = trim(line);
    try {
      if (text.empty()) {
        // fall through to the next prompt
      } else if (text == "quit" || text == "exit") {
        break;
      } else if (text == "help") {
        out << "enter an expression, or: eval EXPR | classify EXPR | shape EXPR | "
               "decompose EXPR | quit\n";
      } else {
        std::string head = text.substr(0, text.find_first_of(" \t"));
        std::string rest = trim(text.substr(head.size()));
        if (head == "classify") {
          out << restyle(verdict_line(classify_prime(eval_string(rest)), style)) << "\n";
        } else if (head == "shape") {
          Options o;
          o.ascii = style == Style::Ascii;
          o.positionals.push_back(rest);
          o.subcommand = "shape";
          out << cmd_shape(o);
        } else if (head == "decompose") {
          Options o;
          o.ascii = style == Style::Ascii;
          o.positionals.push_back(rest);
          o.subcommand = "decompose";
          out << cmd_decompose(o);
        } else if (head == "eval") {
          out << format(eval_string(rest), style) << "\n";
        } else {
          out << format(eval_string(text), style) << "\n";
        }
      }
    } catch (const std::exception& e) {
      out << "error: " << e.what() << "\n";
    }
    err << "grossone> " << std::flush;
  }
}

}  // namespace gross::cli
