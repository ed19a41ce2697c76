#include "autoequiv/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autoequiv/constructions.hpp"
#include "autoequiv/equivalence.hpp"
#include "autoequiv/errors.hpp"
#include "autoequiv/graph.hpp"
#include "autoequiv/model_io.hpp"
#include "autoequiv/oracle.hpp"
#include "autoequiv/search.hpp"

namespace autoequiv {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kListElementsUpTo = 1000;

// Thrown after the violations have been printed.
struct Reported {};

struct Common {
  std::string format = "text";
  std::optional<std::uint64_t> budget;

  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget,
                  "Search node budget (default 10000000, or $AUTOEQUIV_BUDGET)");
}

SearchBudget resolve_budget(const Common& c) {
  SearchBudget b;
  if (c.budget) {
    b.max_nodes = *c.budget;
  } else if (const char* env = std::getenv("AUTOEQUIV_BUDGET"); env && *env) {
    std::size_t used = 0;
    try {
      b.max_nodes = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0') {
      throw ParseError(std::string("AUTOEQUIV_BUDGET is not a node count: '") + env + "'");
    }
  }
  return b;
}

void print_violations(const ValidationReport& report, std::ostream& os) {
  for (const auto& v : report) os << v.path << ": " << v.message << "\n";
}

// Loads a valid multi-model or reports why not. Invalid input is an error
// (exit 2) for every subcommand except validate.
MultiModel load_valid(const std::string& path, std::ostream& err) {
  auto result = load_model_file(path);
  if (!result.ok()) {
    err << path << ": invalid model\n";
    print_violations(result.violations, err);
    throw Reported{};
  }
  return std::move(*result.model);
}

ojson group_json(const SortedDomain& domain, const PermGroup& g) {
  ojson j;
  j["order"] = g.order();
  j["generators"] = ojson::array();
  for (const auto& p : g.generators()) j["generators"].push_back(format_cycles(domain, p));
  if (g.order() <= kListElementsUpTo) {
    j["elements"] = ojson::array();
    for (const auto& p : g.elements()) j["elements"].push_back(format_cycles(domain, p));
  }
  return j;
}

void group_text(const std::string& name, const SortedDomain& domain, const PermGroup& g,
                std::ostream& out) {
  out << name << ": order " << g.order() << "\n";
  out << "  generators:";
  if (g.generators().empty()) out << " (none)";
  for (const auto& p : g.generators()) out << " " << format_cycles(domain, p);
  out << "\n";
  if (g.order() <= kListElementsUpTo) {
    out << "  elements:";
    for (const auto& p : g.elements()) out << " " << format_cycles(domain, p);
    out << "\n";
  }
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, const Common& c, std::ostream& out) {
  const auto result = load_model_file(path);
  if (c.json()) {
    ojson j;
    j["valid"] = result.ok();
    j["violations"] = ojson::array();
    for (const auto& v : result.violations) {
      j["violations"].push_back({{"path", v.path}, {"message", v.message}});
    }
    out << j.dump(2) << "\n";
  } else if (result.ok()) {
    out << "valid\n";
  } else {
    out << "invalid (" << result.violations.size() << " violation"
        << (result.violations.size() == 1 ? "" : "s") << ")\n";
    print_violations(result.violations, out);
  }
  return result.ok() ? kExitTrue : kExitError;
}

// ---- aut --------------------------------------------------------------------

int cmd_aut(const std::string& path, bool relations_only, const Common& c, std::ostream& out,
            std::ostream& err) {
  const auto mm = load_valid(path, err);
  const auto budget = resolve_budget(c);
  const auto reading = relations_only ? AutReading::relations_only : AutReading::within_algebra;
  const auto& domain = mm.domain();
  NodeBudget nodes(budget.max_nodes);
  const auto aut_a = algebra_automorphisms(mm.algebra, nodes, budget.group_cap);
  std::vector<PermGroup> auts;
  for (std::size_t i = 0; i < mm.interpretations.size(); ++i) {
    auts.push_back(model_automorphisms(mm.model(i), nodes, budget.group_cap, reading));
  }
  if (c.json()) {
    ojson j;
    j["reading"] = relations_only ? "relations-only" : "within-algebra";
    j["algebra"] = group_json(domain, aut_a);
    j["interpretations"] = ojson::array();
    for (std::size_t i = 0; i < auts.size(); ++i) {
      auto g = group_json(domain, auts[i]);
      ojson entry;
      entry["label"] = mm.interpretations[i].label;
      for (auto& [k, v] : g.items()) entry[k] = v;
      j["interpretations"].push_back(entry);
    }
    out << j.dump(2) << "\n";
  } else {
    group_text("Aut(A)", domain, aut_a, out);
    for (std::size_t i = 0; i < auts.size(); ++i) {
      group_text("Aut(" + mm.interpretations[i].label + ")", domain, auts[i], out);
    }
  }
  return kExitTrue;
}

// ---- equiv ------------------------------------------------------------------

struct EquivArgs {
  std::string a, b;
  std::string mode = "multi";
  bool strict = false;
  std::optional<std::string> verify;
};

ojson pairs_json(const std::vector<IndexPair>& pairs) {
  ojson j = ojson::array();
  for (const auto& [i, k] : pairs) j.push_back({i, k});
  return j;
}

std::string pairs_text(const std::vector<IndexPair>& pairs) {
  std::string s;
  for (const auto& [i, k] : pairs) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(i) + "," + std::to_string(k) + ")";
  }
  return s.empty() ? "(none)" : s;
}

Model single_model(const MultiModel& mm, const std::string& path) {
  if (mm.interpretations.size() != 1) {
    throw PreconditionError(path + ": model mode needs exactly one interpretation, found " +
                            std::to_string(mm.interpretations.size()));
  }
  return mm.model(0);
}

nlohmann::json witness_part(const nlohmann::json& doc, const char* key) {
  const auto& w = doc.contains("witness") ? doc.at("witness") : doc;
  if (!w.is_object() || !w.contains(key)) {
    throw ParseError(std::string("witness file has no \"") + key + "\" entry");
  }
  return w.at(key);
}

int verify_witness(const EquivArgs& args, const MultiModel& mm1, const MultiModel& mm2,
                   const SearchBudget& budget, const Common& c, std::ostream& out) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(*args.verify));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(*args.verify + ": " + e.what());
  }
  const auto& domain = mm1.domain();
  Recheck check;
  if (args.mode == "algebra") {
    check = verify_algebra_witness(mm1.algebra, mm2.algebra,
                                   permutation_from_json(domain, witness_part(doc, "delta")), budget);
  } else if (args.mode == "model") {
    check = verify_model_witness(
        single_model(mm1, args.a), single_model(mm2, args.b),
        ModelEquivWitness{permutation_from_json(domain, witness_part(doc, "mu"))}, budget);
  } else {
    MultiModelEquivWitness w;
    const auto alpha = witness_part(doc, "alpha");
    const auto mus = witness_part(doc, "mus");
    if (!alpha.is_array() || !mus.is_array()) throw ParseError("alpha and mus must be arrays");
    for (const auto& p : alpha) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
          !p[1].is_number_unsigned()) {
        throw ParseError("alpha entries must be [i, j] index pairs");
      }
      w.alpha.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    for (const auto& m : mus) w.mus.push_back(permutation_from_json(domain, m));
    check = verify_multimodel_witness(mm1, mm2, w, budget);
  }
  if (c.json()) {
    ojson j;
    j["witness_ok"] = check.ok;
    if (!check.ok) j["reason"] = check.reason;
    out << j.dump(2) << "\n";
  } else if (check.ok) {
    out << "witness ok\n";
  } else {
    out << "witness rejected: " << check.reason << "\n";
  }
  return check.ok ? kExitTrue : kExitFalse;
}

int cmd_equiv(const EquivArgs& args, const Common& c, std::ostream& out, std::ostream& err) {
  const auto mm1 = load_valid(args.a, err);
  const auto mm2 = load_valid(args.b, err);
  const auto budget = resolve_budget(c);
  if (args.verify) return verify_witness(args, mm1, mm2, budget, c, out);

  const auto& domain = mm1.domain();
  if (args.mode == "algebra" || args.mode == "model") {
    std::optional<Permutation> witness;
    const char* key = args.mode == "algebra" ? "delta" : "mu";
    if (args.mode == "algebra") {
      witness = algebras_automorphically_equivalent(mm1.algebra, mm2.algebra, budget);
    } else if (auto w = models_automorphically_equivalent(single_model(mm1, args.a),
                                                          single_model(mm2, args.b), budget)) {
      witness = w->mu;
    }
    if (c.json()) {
      ojson j;
      j["mode"] = args.mode;
      j["equivalent"] = witness.has_value();
      if (witness) j["witness"][key] = permutation_to_json(domain, *witness);
      out << j.dump(2) << "\n";
    } else if (witness) {
      out << "equivalent\n" << key << ": " << format_cycles(domain, *witness) << "\n";
    } else {
      out << "not equivalent\n";
    }
    return witness ? kExitTrue : kExitFalse;
  }

  EquivalenceOptions options{budget, args.strict};
  const auto d = decide_multimodel_equivalence(mm1, mm2, options);
  const bool yes = d.verdict == Verdict::equivalent;
  if (c.json()) {
    ojson j;
    j["mode"] = "multi";
    j["equivalent"] = yes;
    j["verdict"] = describe(d.verdict);
    if (d.note) j["note"] = *d.note;
    j["edges"] = pairs_json(d.edges);
    if (d.witness) {
      j["witness"]["alpha"] = pairs_json(d.witness->alpha);
      j["witness"]["mus"] = ojson::array();
      for (const auto& mu : d.witness->mus) {
        j["witness"]["mus"].push_back(permutation_to_json(domain, mu));
      }
    }
    out << j.dump(2) << "\n";
  } else {
    out << (yes ? "equivalent" : "not equivalent: " + describe(d.verdict)) << "\n";
    if (d.note) out << "note: " << *d.note << "\n";
    if (!d.edges.empty() || d.verdict != Verdict::algebras_not_isomorphic) {
      if (d.verdict != Verdict::interpretation_counts_differ) {
        out << "edges: " << pairs_text(d.edges) << "\n";
      }
    }
    if (d.witness) {
      out << "alpha: " << pairs_text(d.witness->alpha) << "\n";
      for (std::size_t k = 0; k < d.witness->mus.size(); ++k) {
        const auto [i, j] = d.witness->alpha[k];
        out << "mu[" << i << "->" << j << "]: " << format_cycles(domain, d.witness->mus[k])
            << "\n";
      }
    }
  }
  return yes ? kExitTrue : kExitFalse;
}

// ---- transform --------------------------------------------------------------

struct TransformArgs {
  std::string path;
  std::optional<std::string> sigma;
  bool complement = false;
  bool simple_complement = false;
  std::optional<std::string> output;
};

int cmd_transform(const TransformArgs& args, const Common& c, std::ostream& out,
                  std::ostream& err) {
  const int chosen = int(args.sigma.has_value()) + int(args.complement) +
                     int(args.simple_complement);
  if (chosen != 1) {
    throw PreconditionError("choose exactly one of --sigma, --complement, --simple-complement");
  }
  const auto mm = load_valid(args.path, err);
  MultiModel result;
  if (args.sigma) {
    result = sigma_transform(mm, parse_cycles(mm.domain(), *args.sigma));
  } else if (args.complement) {
    result = complement(mm);
  } else {
    result = simple_graph_complement(mm);
  }
  const auto text = dump_model(result);
  if (!args.output) {
    out << text;
    return kExitTrue;
  }
  write_text_file(*args.output, text);
  if (c.json()) {
    ojson j;
    j["written"] = *args.output;
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << *args.output << "\n";
  }
  return kExitTrue;
}

// ---- graph ------------------------------------------------------------------

int cmd_graph(const std::string& path, const std::string& check, const Common& c,
              std::ostream& out, std::ostream& err) {
  const auto mm = load_valid(path, err);
  if (mm.interpretations.empty()) throw ShapeError(path + ": no interpretations");
  bool all = true;
  ojson results = ojson::array();
  for (std::size_t i = 0; i < mm.interpretations.size(); ++i) {
    const auto g = model_to_graph(mm.model(i));
    const bool holds = check == "tree" ? is_tree(g) : is_connected(g);
    all = all && holds;
    const auto& label = mm.interpretations[i].label;
    if (c.json()) {
      results.push_back({{"label", label}, {check, holds}});
    } else {
      out << label << ": " << (holds ? "" : "not ") << (check == "tree" ? "a tree" : "connected")
          << "\n";
    }
  }
  if (c.json()) {
    ojson j;
    j["check"] = check;
    j["holds"] = all;
    j["interpretations"] = results;
    out << j.dump(2) << "\n";
  }
  return all ? kExitTrue : kExitFalse;
}

// ---- oracle (hidden) --------------------------------------------------------

int cmd_oracle(const std::string& a, const std::optional<std::string>& b, const std::string& mode,
               const Common& c, std::ostream& out, std::ostream& err) {
  const auto mm1 = load_valid(a, err);
  const auto& domain = mm1.domain();
  ojson j;
  if (!b) {
    j["algebra_order"] = oracle_algebra_automorphisms(mm1.algebra).size();
    j["interpretations"] = ojson::array();
    for (std::size_t i = 0; i < mm1.interpretations.size(); ++i) {
      j["interpretations"].push_back(
          {{"label", mm1.interpretations[i].label},
           {"order", oracle_model_automorphisms(mm1.model(i)).size()}});
    }
  } else {
    const auto mm2 = load_valid(*b, err);
    std::optional<Permutation> single;
    std::optional<MultiModelEquivWitness> multi;
    if (mode == "algebra") {
      single = oracle_algebra_equiv(mm1.algebra, mm2.algebra);
    } else if (mode == "model") {
      single = oracle_model_equiv(single_model(mm1, a), single_model(mm2, *b));
    } else {
      multi = oracle_multimodel_equiv(mm1, mm2);
    }
    j["mode"] = mode;
    j["equivalent"] = single.has_value() || multi.has_value();
    if (single) j["witness"][mode == "algebra" ? "delta" : "mu"] = permutation_to_json(domain, *single);
    if (multi) {
      j["witness"]["alpha"] = pairs_json(multi->alpha);
      j["witness"]["mus"] = ojson::array();
      for (const auto& mu : multi->mus) {
        j["witness"]["mus"].push_back(permutation_to_json(domain, mu));
      }
    }
  }
  if (c.json()) {
    out << j.dump(2) << "\n";
  } else {
    out << j.dump() << "\n";
  }
  if (b) return j["equivalent"].get<bool>() ? kExitTrue : kExitFalse;
  return kExitTrue;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphic equivalence of algebras, models and multi-models", "autoequiv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "autoequiv 0.1.0");

  Common common;
  std::string path, check = "tree";
  bool relations_only = false;
  EquivArgs eq;
  TransformArgs tr;
  std::string oracle_a, oracle_mode = "multi";
  std::optional<std::string> oracle_b;

  auto* validate = app.add_subcommand("validate", "Check a model file against every rule");
  validate->add_option("path", path, "Model file")->required();
  add_common(validate, common);

  auto* aut = app.add_subcommand("aut", "Print Aut(A) and Aut(f) for each interpretation");
  aut->add_option("path", path, "Model file")->required();
  aut->add_flag("--relations-only", relations_only,
                "Aut(f) over all bijections, ignoring the operations");
  add_common(aut, common);
  add_budget(aut, common);

  auto* equiv = app.add_subcommand("equiv", "Decide automorphic equivalence of two files");
  equiv->add_option("a", eq.a, "First model file")->required();
  equiv->add_option("b", eq.b, "Second model file")->required();
  equiv->add_option("--mode", eq.mode, "What to compare")
      ->check(CLI::IsMember({"model", "multi", "algebra"}))
      ->capture_default_str();
  equiv->add_flag("--strict-single-mu", eq.strict, "Require one mu for every matched pair");
  equiv->add_option("--verify", eq.verify, "Recheck a witness file instead of searching");
  add_common(equiv, common);
  add_budget(equiv, common);

  auto* transform = app.add_subcommand("transform", "Build an equivalent multi-model");
  transform->add_option("path", tr.path, "Model file")->required();
  transform->add_option("--sigma", tr.sigma, "Automorphism of A in cycle notation");
  transform->add_flag("--complement", tr.complement, "Cartesian complement of every relation");
  transform->add_flag("--simple-complement", tr.simple_complement,
                      "Loop-free complement of a graph");
  transform->add_option("-o,--output", tr.output, "Write the result here instead of stdout");
  add_common(transform, common);

  auto* graph = app.add_subcommand("graph", "Structural checks on graph-shaped models");
  graph->add_option("path", path, "Model file")->required();
  graph->add_option("--check", check, "Predicate")
      ->check(CLI::IsMember({"tree", "connected"}))
      ->required();
  add_common(graph, common);

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->group("");
  oracle->add_option("a", oracle_a, "Model file")->required();
  oracle->add_option("b", oracle_b, "Second model file");
  oracle->add_option("--mode", oracle_mode)->check(CLI::IsMember({"model", "multi", "algebra"}));
  add_common(oracle, common);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("autoequiv");
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, common, out);
    if (aut->parsed()) return cmd_aut(path, relations_only, common, out, err);
    if (equiv->parsed()) return cmd_equiv(eq, common, out, err);
    if (transform->parsed()) return cmd_transform(tr, common, out, err);
    if (graph->parsed()) return cmd_graph(path, check, common, out, err);
    if (oracle->parsed()) {
      return cmd_oracle(oracle_a, oracle_b, oracle_mode, common, out, err);
    }
  } catch (const Reported&) {
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace autoequiv
