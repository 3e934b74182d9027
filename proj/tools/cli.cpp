// Copyright 2026 The tlyndon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlyndon/automaton.hpp"
#include "tlyndon/duplication.hpp"
#include "tlyndon/errors.hpp"
#include "tlyndon/factorizer.hpp"
#include "tlyndon/oracles.hpp"
#include "tlyndon/random.hpp"
#include "tlyndon/structural.hpp"

namespace tlyndon::cli {

namespace {

using json = nlohmann::ordered_json;

class Disagreement : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// Input problems exit with 1, everything else is an internal failure.
int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e) ||
      dynamic_cast<const std::out_of_range*>(&e) || dynamic_cast<const std::length_error*>(&e))
    return kInputError;
  return kInternalError;
}

struct FactorizeFlags {
  std::string engine = "automaton";
  bool json = false;
  bool marked = false;
  bool trace = false;
  bool ascii = false;
  int debug = 0;
};

struct FactorizeResult {
  RatExpr input;
  std::optional<StateFactorization> states;
  Factorization factors;
  std::string marked;
  std::vector<std::string> trace;
};

std::string pair_text(PairState p) {
  return "⟨" + std::to_string(p.left) + "," + std::to_string(p.right) + "⟩";
}

FactorizeResult factorize_with(const RatExpr& e, const Alphabet& alphabet,
                               const FactorizeFlags& flags) {
  FactorizeResult r{e, std::nullopt, {}, {}, {}};
  const bool automaton = flags.engine != "structural";
  const bool structural = flags.engine != "automaton";
  if (automaton) {
    FactorizerOptions opt;
    opt.alphabet = &alphabet;
    opt.debug_level = flags.debug;
    opt.record_events = flags.trace;
    r.states = factorize_states(e, opt);
    r.factors = extract_factorization(*r.states);
    if (flags.marked) r.marked = marked_expression(*r.states, flags.ascii);
    for (const auto& ev : r.states->events)
      r.trace.push_back(pair_text(ev.leading) + " case=" + std::string(case_name(ev.kind)));
  }
  if (structural) {
    Factorization s = factorize_structural(e, alphabet);
    if (automaton && !same_factorization(r.factors, s, alphabet))
      throw Disagreement("engines disagree: automaton " + format_factorization(r.factors) +
                         ", structural " + format_factorization(s));
    if (!automaton) r.factors = std::move(s);
  }
  return r;
}

json to_json(const FactorizeResult& r, const FactorizeFlags& flags) {
  json j;
  j["input"] = format_expr(r.input);
  if (r.states) {
    j["tau"] = format_expr(r.states->duplicated);
    j["states"] = r.states->automaton.state_count();
    j["q_main"] = r.states->q_main;
    j["q_secondary"] = r.states->q_secondary;
  }
  json factors = json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"prime", format_expr(f.prime)}, {"exponent", format_ordinal(f.exponent)}});
  j["factors"] = std::move(factors);
  if (r.states) j["steps"] = r.states->steps;
  if (flags.marked && r.states) j["marked"] = r.marked;
  if (flags.trace && r.states) j["trace"] = r.trace;
  return j;
}

void print_factorize(const FactorizeResult& r, const FactorizeFlags& flags, std::ostream& out) {
  if (flags.json) {
    out << to_json(r, flags).dump() << '\n';
    return;
  }
  for (const auto& line : r.trace) out << line << '\n';
  if (flags.marked && r.states) out << r.marked << '\n';
  out << format_factorization(r.factors) << '\n';
}

std::string compare_text(const CompareOutcome& c) {
  switch (c.kind) {
    case CompareOutcome::Kind::StrictlyLess: return "<";
    case CompareOutcome::Kind::StrictlyGreater: return ">";
    case CompareOutcome::Kind::Equal: return "=";
    case CompareOutcome::Kind::LeftIsProperPrefix: return "< (prefix)";
    case CompareOutcome::Kind::RightIsProperPrefix: return "> (prefix)";
  }
  return "?";
}

std::string prime_text(const RatExpr& e, const Alphabet& alphabet) {
  const PrimeVerdict v = prime_verdict(e, alphabet);
  if (v.prime) return "prime";
  if (v.smaller_suffix_state) {
    const Automaton a = compile(e, alphabet);
    return "not prime: the suffix from state " + std::to_string(*v.smaller_suffix_state) + ", " +
           format_expr(*suffix_word(a, *v.smaller_suffix_state)) + ", is smaller";
  }
  return "not prime: " + format_factor({v.root->root, v.root->exponent});
}

int run_batch(const std::string& path, const Alphabet& alphabet, const FactorizeFlags& flags,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    return kInputError;
  }
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    json rec;
    rec["line"] = number;
    rec["input"] = line;
    const auto start = std::chrono::steady_clock::now();
    try {
      const RatExpr e = parse_expr(line, alphabet);
      rec["status"] = "ok";
      rec["result"] = to_json(factorize_with(e, alphabet, flags), flags);
    } catch (const ParseError& ex) {
      rec["status"] = "parse_error";
      rec["error"] = ex.what();
    } catch (const std::exception& ex) {
      rec["status"] = "error";
      rec["error"] = ex.what();
    }
    rec["ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    out << rec.dump() << '\n';
  }
  return kOk;
}

int run_selftest(int cases, std::uint64_t seed, std::ostream& out) {
  ExprGenerator gen(seed);
  int failures = 0;
  for (int c = 0; c < cases; ++c) {
    const RatExpr e = gen();
    std::string problem;
    try {
      FactorizerOptions opt;
      opt.debug_level = 1;
      const Factorization a = extract_factorization(factorize_states(e, opt));
      const Factorization s = factorize_structural(e);
      if (!same_factorization(a, s)) {
        problem = "engines disagree: " + format_factorization(a) + " vs " + format_factorization(s);
      } else if (auto bad = check_factorization(a, e); !bad.empty()) {
        problem = bad.front();
      }
    } catch (const std::exception& ex) {
      problem = ex.what();
    }
    if (!problem.empty()) {
      if (++failures <= 10) out << "FAIL " << format_expr(e) << ": " << problem << '\n';
    }
  }
  out << "selftest: " << cases << " cases, " << failures << " failures (seed " << seed << ")\n";
  return failures == 0 ? kOk : kInternalError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime factorization of transfinite rational words", "tlyndon"};
  app.require_subcommand(1);
  std::string letters;
  app.add_option("--alphabet", letters, "Ordered alphabet letters (default a..z)");

  FactorizeFlags flags;
  std::string expr;
  std::string expr2;
  std::string path;
  bool dot = false;
  int cases = 200;
  std::uint64_t seed = 1;

  auto* fac = app.add_subcommand("factorize", "Prime factorization of an expression");
  fac->add_option("expr", expr, "Expression, e.g. \"(a^w b)^w a^w\"")->required();
  fac->add_option("--engine", flags.engine, "automaton, structural or both")
      ->check(CLI::IsMember({"automaton", "structural", "both"}));
  fac->add_flag("--json", flags.json, "JSON output");
  fac->add_flag("--marked", flags.marked, "Print tau(e) with cut markers");
  fac->add_flag("--trace", flags.trace, "Print one line per algorithm step");
  fac->add_flag("--ascii", flags.ascii, "Write main markers as ||");
  fac->add_option("--debug", flags.debug, "Invariant checking level 0-2")->check(CLI::Range(0, 2));

  auto* tau_cmd = app.add_subcommand("tau", "Duplicated expression");
  tau_cmd->add_option("expr", expr)->required();

  auto* comp = app.add_subcommand("compile", "Automaton of an expression");
  comp->add_option("expr", expr)->required();
  comp->add_flag("--dot", dot, "Graphviz output");

  auto* cmp = app.add_subcommand("compare", "Lexicographic comparison");
  cmp->add_option("left", expr)->required();
  cmp->add_option("right", expr2)->required();

  auto* prime = app.add_subcommand("prime", "Primality verdict");
  prime->add_option("expr", expr)->required();

  auto* batch = app.add_subcommand("batch", "Factorize each line of a file as JSON lines");
  batch->add_option("file", path)->required();
  batch->add_option("--engine", flags.engine)
      ->check(CLI::IsMember({"automaton", "structural", "both"}));

  auto* self = app.add_subcommand("selftest", "Random differential check of both engines");
  self->add_option("--cases", cases)->check(CLI::PositiveNumber);
  self->add_option("--seed", seed);

  std::vector<const char*> argv{"tlyndon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Alphabet alphabet = letters.empty() ? Alphabet::standard() : Alphabet(letters);
    if (*fac) {
      print_factorize(factorize_with(parse_expr(expr, alphabet), alphabet, flags), flags, out);
    } else if (*tau_cmd) {
      out << format_expr(tau(parse_expr(expr, alphabet))) << '\n';
    } else if (*comp) {
      const Automaton a = compile(parse_expr(expr, alphabet), alphabet);
      out << (dot ? to_dot(a) : describe(a));
    } else if (*cmp) {
      out << compare_text(compare(parse_expr(expr, alphabet), parse_expr(expr2, alphabet), alphabet))
          << '\n';
    } else if (*prime) {
      out << prime_text(parse_expr(expr, alphabet), alphabet) << '\n';
    } else if (*batch) {
      return run_batch(path, alphabet, flags, out, err);
    } else if (*self) {
      return run_selftest(cases, seed, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace tlyndon::cli
