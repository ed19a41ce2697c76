// Python bindings. Models cross the boundary as JSON text in the model file
// format; permutations come back as {sort: [images]} dicts.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "autoequiv/cli.hpp"
#include "autoequiv/constructions.hpp"
#include "autoequiv/equivalence.hpp"
#include "autoequiv/errors.hpp"
#include "autoequiv/graph.hpp"
#include "autoequiv/model_io.hpp"
#include "autoequiv/oracle.hpp"
#include "autoequiv/search.hpp"

namespace py = pybind11;
namespace ae = autoequiv;

namespace {

ae::MultiModel load(const std::string& text) {
  auto r = ae::parse_model(text);
  if (!r.ok()) {
    std::ostringstream os;
    os << "invalid model:";
    for (const auto& v : r.violations) os << "\n  " << v.path << ": " << v.message;
    throw ae::ValidationError(os.str());
  }
  return std::move(*r.model);
}

ae::SearchBudget budget_of(std::optional<std::uint64_t> max_nodes) {
  ae::SearchBudget b;
  if (max_nodes) b.max_nodes = *max_nodes;
  return b;
}

py::dict perm(const ae::SortedDomain& d, const ae::Permutation& p) {
  py::dict out;
  const auto per = p.per_sort(d);
  for (std::size_t s = 0; s < d.sort_count(); ++s) out[py::str(d.name(s))] = per[s];
  return out;
}

py::list perms(const ae::SortedDomain& d, const std::vector<ae::Permutation>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(perm(d, p));
  return out;
}

ae::Permutation perm_in(const ae::SortedDomain& d, const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return ae::parse_cycles(d, obj.cast<std::string>());
  std::vector<std::vector<ae::Point>> per(d.sort_count());
  const auto dict = obj.cast<py::dict>();
  if (dict.size() != d.sort_count()) {
    throw ae::ParseError("permutation must list every sort exactly once");
  }
  for (auto [key, value] : dict) {
    const auto s = d.find_sort(key.cast<std::string>());
    if (!s) throw ae::ParseError("unknown sort '" + key.cast<std::string>() + "'");
    per[*s] = value.cast<std::vector<ae::Point>>();
  }
  return ae::Permutation::from_sorts(d, per);
}

py::list pairs(const std::vector<ae::IndexPair>& ps) {
  py::list out;
  for (const auto& [i, j] : ps) out.append(py::make_tuple(i, j));
  return out;
}

py::dict group(const ae::PermGroup& g) {
  py::dict out;
  out["order"] = g.order();
  out["generators"] = perms(g.domain(), g.generators());
  out["elements"] = perms(g.domain(), g.elements());
  return out;
}

py::dict automorphisms(const std::string& text, bool relations_only,
                       std::optional<std::uint64_t> max_nodes) {
  const auto mm = load(text);
  const auto b = budget_of(max_nodes);
  ae::NodeBudget nodes(b.max_nodes);
  const auto reading =
      relations_only ? ae::AutReading::relations_only : ae::AutReading::within_algebra;
  py::dict out;
  out["algebra"] = group(ae::algebra_automorphisms(mm.algebra, nodes, b.group_cap));
  py::dict per_label;
  for (std::size_t i = 0; i < mm.interpretations.size(); ++i) {
    per_label[py::str(mm.interpretations[i].label)] =
        group(ae::model_automorphisms(mm.model(i), nodes, b.group_cap, reading));
  }
  out["interpretations"] = per_label;
  return out;
}

ae::Model single(const ae::MultiModel& mm) {
  if (mm.interpretations.size() != 1) {
    throw ae::PreconditionError("model mode needs exactly one interpretation");
  }
  return mm.model(0);
}

py::dict equivalent(const std::string& a, const std::string& b, const std::string& mode,
                    bool strict_single_mu, std::optional<std::uint64_t> max_nodes) {
  const auto mm1 = load(a);
  const auto mm2 = load(b);
  const auto& d = mm1.domain();
  const auto budget = budget_of(max_nodes);
  py::dict out;
  out["mode"] = mode;
  if (mode == "algebra") {
    const auto delta = ae::algebras_automorphically_equivalent(mm1.algebra, mm2.algebra, budget);
    out["equivalent"] = delta.has_value();
    out["witness"] = delta ? py::object(py::dict(py::arg("delta") = perm(d, *delta))) : py::none();
  } else if (mode == "model") {
    const auto w = ae::models_automorphically_equivalent(single(mm1), single(mm2), budget);
    out["equivalent"] = w.has_value();
    out["witness"] = w ? py::object(py::dict(py::arg("mu") = perm(d, w->mu))) : py::none();
  } else if (mode == "multi") {
    const auto r = ae::decide_multimodel_equivalence(mm1, mm2, {budget, strict_single_mu});
    out["equivalent"] = r.verdict == ae::Verdict::equivalent;
    out["verdict"] = ae::describe(r.verdict);
    out["edges"] = pairs(r.edges);
    out["note"] = r.note ? py::object(py::str(*r.note)) : py::none();
    if (r.witness) {
      py::dict w;
      w["alpha"] = pairs(r.witness->alpha);
      w["mus"] = perms(d, r.witness->mus);
      out["witness"] = w;
    } else {
      out["witness"] = py::none();
    }
  } else {
    throw ae::PreconditionError("mode must be 'model', 'multi' or 'algebra'");
  }
  return out;
}

py::tuple verify(const std::string& a, const std::string& b, const py::dict& witness,
                 const std::string& mode) {
  const auto mm1 = load(a);
  const auto mm2 = load(b);
  const auto& d = mm1.domain();
  ae::Recheck r;
  if (mode == "algebra") {
    r = ae::verify_algebra_witness(mm1.algebra, mm2.algebra, perm_in(d, witness["delta"]));
  } else if (mode == "model") {
    r = ae::verify_model_witness(single(mm1), single(mm2), {perm_in(d, witness["mu"])});
  } else {
    ae::MultiModelEquivWitness w;
    for (auto p : witness["alpha"]) {
      const auto pair = p.cast<std::pair<std::size_t, std::size_t>>();
      w.alpha.push_back(pair);
    }
    for (auto m : witness["mus"]) w.mus.push_back(perm_in(d, m));
    r = ae::verify_multimodel_witness(mm1, mm2, w);
  }
  return py::make_tuple(r.ok, r.reason);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Automorphic equivalence of finite algebras, models and multi-models";

  auto base = py::register_exception<ae::Error>(m, "AutoequivError", PyExc_ValueError);
  py::register_exception<ae::ValidationError>(m, "ValidationError", base);
  py::register_exception<ae::ParseError>(m, "ParseError", base);
  py::register_exception<ae::SignatureError>(m, "SignatureError", base);
  py::register_exception<ae::DomainMismatch>(m, "DomainMismatch", base);
  py::register_exception<ae::PreconditionError>(m, "PreconditionError", base);
  py::register_exception<ae::ShapeError>(m, "ShapeError", base);
  py::register_exception<ae::IoError>(m, "IoError", base);
  py::register_exception<ae::ResourceError>(m, "ResourceError", base);

  m.def(
      "validate",
      [](const std::string& text) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : ae::parse_model(text).violations) out.emplace_back(v.path, v.message);
        return out;
      },
      py::arg("text"), "Violations as (path, message) pairs; empty means valid.");
  m.def("normalize", [](const std::string& text) { return ae::dump_model(load(text)); },
        py::arg("text"), "Canonical model file text (graph shorthand expanded, tuples sorted).");
  m.def("automorphisms", &automorphisms, py::arg("text"), py::arg("relations_only") = false,
        py::arg("max_nodes") = py::none(), "Aut(A) and Aut(f) for every interpretation.");
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"), py::arg("mode") = "multi",
        py::arg("strict_single_mu") = false, py::arg("max_nodes") = py::none(),
        "Decide automorphic equivalence; the witness is None when not equivalent.");
  m.def("verify", &verify, py::arg("a"), py::arg("b"), py::arg("witness"),
        py::arg("mode") = "multi", "Recheck a witness; returns (ok, reason).");
  m.def(
      "sigma_transform",
      [](const std::string& text, const py::object& sigma) {
        const auto mm = load(text);
        return ae::dump_model(ae::sigma_transform(mm, perm_in(mm.domain(), sigma)));
      },
      py::arg("text"), py::arg("sigma"));
  m.def("complement", [](const std::string& text) { return ae::dump_model(ae::complement(load(text))); },
        py::arg("text"));
  m.def(
      "simple_graph_complement",
      [](const std::string& text) { return ae::dump_model(ae::simple_graph_complement(load(text))); },
      py::arg("text"));
  m.def(
      "graph_checks",
      [](const std::string& text) {
        const auto mm = load(text);
        py::dict out;
        for (std::size_t i = 0; i < mm.interpretations.size(); ++i) {
          const auto g = ae::model_to_graph(mm.model(i));
          py::dict r;
          r["tree"] = ae::is_tree(g);
          r["connected"] = ae::is_connected(g);
          out[py::str(mm.interpretations[i].label)] = r;
        }
        return out;
      },
      py::arg("text"), "is_tree / is_connected per interpretation.");
  m.def(
      "oracle_equivalent",
      [](const std::string& a, const std::string& b, const std::string& mode) {
        const auto mm1 = load(a);
        const auto mm2 = load(b);
        if (mode == "algebra") return ae::oracle_algebra_equiv(mm1.algebra, mm2.algebra).has_value();
        if (mode == "model") return ae::oracle_model_equiv(single(mm1), single(mm2)).has_value();
        return ae::oracle_multimodel_equiv(mm1, mm2).has_value();
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "multi", "Brute-force reference verdict.");
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "autoequiv");
        std::ostringstream out, err;
        const int code = ae::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
