// Command-line front end: validate, emit, axioms, angle, cone, octahedron, report.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nang/axioms.hpp"
#include "nang/io.hpp"
#include "nang/workbench.hpp"

using namespace nang;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PresentationDocument load_source(const std::string& src, std::optional<int> n) {
  const std::string prefix = "builtin:";
  if (src.rfind(prefix, 0) == 0) return builtin_document(src.substr(prefix.size()), n);
  return load_document(src);
}

// Inline JSON or @path.
json read_spec(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError("cannot open " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed spec: ") + e.what());
  }
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw InputError(what + ": unknown key \"" + it.key() + "\"");
  }
}

Mor morphism_of(const Workbench& wb, const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw InputError(std::string("missing morphism literal \"") + key + "\"");
  return parse_morphism(wb.cat(), j[key].get<std::string>());
}

// A row given as a morphism literal (embedded into the class) or as {objects, maps}.
NSequence row_of(const Workbench& wb, const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing row \"") + key + "\"");
  const json& r = j[key];
  if (r.is_string()) return embed_morphism(wb.oracle(), parse_morphism(wb.cat(), r.get<std::string>()));
  require_keys(r, {"objects", "maps"}, key);
  AngleSpec s;
  for (const auto& o : r.at("objects")) s.objects.push_back(parse_object(wb.cat(), o.get<std::string>()));
  for (const auto& m : r.at("maps")) {
    std::vector<Scalar> coords;
    for (const auto& x : m) coords.push_back(parse_scalar(x.is_string() ? x.get<std::string>() : x.dump()));
    s.maps.push_back(coords);
  }
  NSequence seq = angle_from_spec(wb.view(), s);
  seq.tag = wb.view().tag();
  return seq;
}

void print_sequence(const Workbench& wb, const std::string& title, const NSequence& s) {
  std::cout << title << ":\n" << sequence_to_string(wb.view(), s) << "\n";
}

void print_membership(const Membership& m) {
  std::cout << "membership: " << verdict_name(m.verdict);
  if (!m.detail.empty()) std::cout << " (" << m.detail << ")";
  std::cout << "\n";
}

void print_summary(const SuiteReport& r) {
  std::cout << "context: " << r.context << ", n = " << r.n << "\n";
  for (const auto& [axiom, counts] : r.per_axiom) {
    std::cout << "  " << axiom << ":";
    for (const auto& [v, c] : counts) std::cout << " " << v << "=" << c;
    std::cout << "\n";
  }
  for (const auto& rec : r.records)
    if (rec.verdict == "VIOLATION" || rec.verdict == "NOT_FOUND")
      std::cout << "  " << rec.verdict << " " << rec.axiom << " " << rec.key << ": " << rec.detail << "\n";
  std::cout << "violations " << r.violations << ", not found " << r.not_found << ", undecided " << r.undecided << "\n";
}

json report_json(const SuiteReport& r) {
  json j;
  j["context"] = r.context;
  j["n"] = r.n;
  j["violations"] = r.violations;
  j["not_found"] = r.not_found;
  j["undecided"] = r.undecided;
  j["counts"] = r.verdict_counts;
  json recs = json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"key", rec.key}, {"axiom", rec.axiom}, {"verdict", rec.verdict}, {"digest", rec.digest},
                    {"detail", rec.detail}});
  j["records"] = recs;
  return j;
}

struct SuiteArgs {
  std::string source;
  std::optional<int> n;
  int bound = 2, budget = 400, threads = 0;
  std::uint64_t seed = 1;
  bool strict = false;
};

void add_suite_flags(CLI::App* cmd, SuiteArgs& a) {
  cmd->add_option("source", a.source, "presentation file or builtin:NAME")->required();
  cmd->add_option("--n", a.n, "angle length parameter");
  cmd->add_option("--universe-bound", a.bound, "maximal summand count of universe objects");
  cmd->add_option("--budget", a.budget, "cap on octahedral instances");
  cmd->add_option("--seed", a.seed, "seed for sampled instances");
  cmd->add_option("--threads", a.threads, "worker threads (0: all cores)");
  cmd->add_flag("--strict", a.strict, "treat UNDECIDED as failure");
}

SuiteReport run_suite(const SuiteArgs& a) {
  WorkbenchOptions wo;
  wo.n = a.n;
  Workbench wb(load_source(a.source, a.n), wo);
  SuiteOptions so;
  so.universe_bound = a.bound;
  so.budget = a.budget;
  so.seed = a.seed;
  so.threads = a.threads;
  return run_full_suite(wb.oracle(), enumerate_universe(wb.view(), a.bound), so);
}

int suite_exit(const SuiteReport& r, bool strict) {
  if (!r.passed(strict)) return kExitFail;
  if (r.undecided > 0) std::cerr << "warning: " << r.undecided << " undecided verdicts\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-angulated quotient workbench"};
  app.require_subcommand(1);

  std::string vsrc;
  auto* validate = app.add_subcommand("validate", "check presentation invariants");
  validate->add_option("source", vsrc, "presentation file or builtin:NAME")->required();

  std::string esrc;
  auto* emit = app.add_subcommand("emit", "print a presentation as a document");
  emit->add_option("source", esrc, "presentation file or builtin:NAME")->required();

  SuiteArgs axioms_args;
  auto* axioms = app.add_subcommand("axioms", "run the axiom suite");
  add_suite_flags(axioms, axioms_args);

  SuiteArgs report_args;
  std::string format = "text";
  auto* report = app.add_subcommand("report", "per-instance verdicts");
  add_suite_flags(report, report_args);
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string src, morphism, ladder, input;
  std::optional<int> n;
  auto* angle = app.add_subcommand("angle", "print the standard angle on a morphism");
  angle->add_option("source", src)->required();
  angle->add_option("--morphism", morphism, "SRC->DST:coords")->required();
  angle->add_option("--n", n);
  auto* cone = app.add_subcommand("cone", "print the first mapping cone of a ladder");
  cone->add_option("source", src)->required();
  cone->add_option("--ladder", ladder, "JSON {from, to, f0, f1} or @file")->required();
  cone->add_option("--n", n);
  auto* octa = app.add_subcommand("octahedron", "print an octahedral completion");
  octa->add_option("source", src)->required();
  octa->add_option("--input", input, "JSON {a0, f1} or {a_row, b_row, c_row, f1}, or @file")->required();
  octa->add_option("--n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*validate) {
      PresentationDocument d = load_source(vsrc, std::nullopt);
      ValidationReport r = validate_presentation(d.cat);
      std::cout << d.cat.name << ": " << (r.ok ? "valid" : "INVALID") << "\n";
      for (const auto& s : r.issues) std::cout << "  " << s << "\n";
      return r.ok ? kExitPass : kExitFail;
    }
    if (*emit) {
      std::cout << emit_document(load_source(esrc, std::nullopt));
      return kExitPass;
    }
    if (*axioms) {
      SuiteReport r = run_suite(axioms_args);
      print_summary(r);
      std::cout << (r.passed(axioms_args.strict) ? "PASS" : "FAIL") << "\n";
      return suite_exit(r, axioms_args.strict);
    }
    if (*report) {
      SuiteReport r = run_suite(report_args);
      if (format == "json") {
        std::cout << report_json(r).dump(2) << "\n";
      } else {
        for (const auto& rec : r.records)
          std::cout << rec.key << "\t" << rec.axiom << "\t" << rec.verdict << "\t" << rec.digest << "\n";
      }
      return suite_exit(r, report_args.strict);
    }

    WorkbenchOptions wo;
    wo.n = n;
    Workbench wb(load_source(src, n), wo);
    const HomView& v = wb.view();
    if (*angle) {
      Mor a0 = parse_morphism(wb.cat(), morphism);
      NSequence s = standard_angle(wb.oracle(), a0);
      print_sequence(wb, "standard angle", s);
      print_membership(theta_contains(wb.oracle(), s));
      return kExitPass;
    }
    if (*cone) {
      json j = read_spec(ladder);
      require_keys(j, {"from", "to", "f0", "f1"}, "ladder");
      NSequence from = row_of(wb, j, "from"), to = row_of(wb, j, "to");
      Mor f0 = morphism_of(wb, j, "f0"), f1 = morphism_of(wb, j, "f1");
      auto l = solve_rn3(wb.oracle(), from, to, f0, f1);
      if (!l) throw TheoremViolation("RN3", "no fill-in ladder");
      std::cout << "legs:\n";
      for (std::size_t k = 0; k < l->legs.size(); ++k)
        std::cout << "  f" << k << " = " << mor_to_string(wb.cat(), l->legs[k]) << "\n";
      NSequence c = cone_rn4_1(v, *l);
      print_sequence(wb, "cone", c);
      Membership m = theta_contains(wb.oracle(), c);
      print_membership(m);
      return m.verdict == Verdict::NotFound ? kExitFail : kExitPass;
    }
    if (*octa) {
      json j = read_spec(input);
      OctahedronInput in;
      if (j.contains("a0")) {
        require_keys(j, {"a0", "f1"}, "input");
        Mor a0 = morphism_of(wb, j, "a0");
        in.f1 = morphism_of(wb, j, "f1");
        in.a_row = embed_morphism(wb.oracle(), a0);
        in.b_row = embed_morphism(wb.oracle(), v.compose(in.f1, a0));
        in.c_row = embed_morphism(wb.oracle(), in.f1);
      } else {
        require_keys(j, {"a_row", "b_row", "c_row", "f1"}, "input");
        in.a_row = row_of(wb, j, "a_row");
        in.b_row = row_of(wb, j, "b_row");
        in.c_row = row_of(wb, j, "c_row");
        in.f1 = morphism_of(wb, j, "f1");
      }
      OctahedronCompletion c = complete_rn4_star(wb.oracle(), in);
      auto bad = completion_failures(wb.oracle(), in, c);
      std::cout << "route: " << c.route << "\n";
      auto show = [&](const char* name, const std::vector<std::optional<Mor>>& xs) {
        for (std::size_t k = 0; k < xs.size(); ++k)
          if (xs[k]) std::cout << "  " << name << k << " = " << mor_to_string(wb.cat(), *xs[k]) << "\n";
      };
      show("f", c.f);
      show("g", c.g);
      show("h", c.h);
      for (std::size_t i = 0; i < c.alpha.size(); ++i)
        std::cout << "  alpha" << i + 1 << " = " << mor_to_string(wb.cat(), c.alpha[i]) << "\n";
      if (c.beta) std::cout << "  beta = " << mor_to_string(wb.cat(), *c.beta) << "\n";
      print_sequence(wb, "long sequence", c.long_sequence);
      print_membership(c.membership);
      for (const auto& s : bad) std::cout << "FAILED CHECK: " << s << "\n";
      return bad.empty() ? kExitPass : kExitFail;
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation in " << e.axiom << ": " << e.subsystem << "\n";
    return kExitFail;
  } catch (const DocumentError& e) {
    std::cerr << "input error";
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
    std::cerr << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConstructionUndecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitPass;
}
