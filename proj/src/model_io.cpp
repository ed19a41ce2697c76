#include "autoequiv/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "autoequiv/errors.hpp"
#include "autoequiv/graph.hpp"

namespace autoequiv {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

class Decoder {
 public:
  DecodeResult run(const json& doc) {
    DecodeResult out;
    if (!doc.is_object()) {
      error("$", "document must be a JSON object");
      out.violations = std::move(errors_);
      return out;
    }
    std::optional<MultiModel> mm;
    if (doc.contains("vertices")) {
      out.graph_shorthand = true;
      mm = decode_graph(doc);
    } else {
      mm = decode_full(doc);
    }
    if (!errors_.empty()) {
      std::sort(errors_.begin(), errors_.end());
      out.violations = std::move(errors_);
      return out;
    }
    out.violations = validate(*mm);
    out.model = std::move(mm);
    return out;
  }

 private:
  void error(std::string path, std::string message) {
    errors_.push_back({std::move(path), std::move(message)});
  }

  std::optional<std::size_t> index(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
      error(path, "expected a non-negative integer");
      return std::nullopt;
    }
    return j.get<std::size_t>();
  }

  std::optional<std::string> string(const json& j, const std::string& path) {
    if (!j.is_string()) {
      error(path, "expected a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  const json* array_field(const json& obj, const char* key, const std::string& path,
                          bool required) {
    if (!obj.contains(key)) {
      if (required) error(path + "." + key, "missing field");
      return nullptr;
    }
    const auto& v = obj.at(key);
    if (!v.is_array()) {
      error(path + "." + key, "expected an array");
      return nullptr;
    }
    return &v;
  }

  std::optional<MultiModel> decode_graph(const json& doc) {
    auto n = index(doc.at("vertices"), "$.vertices");
    bool directed = false;
    if (doc.contains("directed")) {
      if (doc.at("directed").is_boolean()) {
        directed = doc.at("directed").get<bool>();
      } else {
        error("$.directed", "expected a boolean");
      }
    }
    if (n && *n == 0) error("$.vertices", "a graph needs at least one vertex");
    std::set<std::pair<Point, Point>> edges;
    if (const auto* arr = array_field(doc, "edges", "$", false)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const auto path = "$.edges[" + std::to_string(i) + "]";
        const auto& e = (*arr)[i];
        if (!e.is_array() || e.size() != 2) {
          error(path, "an edge is a pair [u, v]");
          continue;
        }
        auto u = index(e[0], path + "[0]");
        auto v = index(e[1], path + "[1]");
        if (!u || !v || !n) continue;
        if (*u >= *n || *v >= *n) {
          error(path, "endpoint out of range");
          continue;
        }
        edges.emplace(static_cast<Point>(*u), static_cast<Point>(*v));
      }
    }
    if (!errors_.empty() || !n) return std::nullopt;
    return MultiModel::from_model(graph_to_model(make_graph(*n, edges, directed)));
  }

  std::optional<std::size_t> sort_ref(const json& j, const std::string& path) {
    auto name = string(j, path);
    if (!name) return std::nullopt;
    auto s = domain_.find_sort(*name);
    if (!s) error(path, "unknown sort '" + *name + "'");
    return s;
  }

  std::optional<Element> element_ref(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
      if (domain_.sort_count() != 1) {
        error(path, "bare indices need a single-sort domain; use \"Sort:index\"");
        return std::nullopt;
      }
      auto i = index(j, path);
      if (!i) return std::nullopt;
      return Element{0, static_cast<std::uint32_t>(*i)};
    }
    if (!j.is_string()) {
      error(path, "expected an element reference");
      return std::nullopt;
    }
    const auto text = j.get<std::string>();
    const auto colon = text.rfind(':');
    std::size_t sort = 0;
    std::string digits = text;
    if (colon == std::string::npos) {
      if (domain_.sort_count() != 1) {
        error(path, "element reference '" + text + "' needs a sort name");
        return std::nullopt;
      }
    } else {
      auto s = domain_.find_sort(text.substr(0, colon));
      if (!s) {
        error(path, "unknown sort in element reference '" + text + "'");
        return std::nullopt;
      }
      sort = *s;
      digits = text.substr(colon + 1);
    }
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      error(path, "bad element index in '" + text + "'");
      return std::nullopt;
    }
    return Element{static_cast<std::uint32_t>(sort), static_cast<std::uint32_t>(std::stoul(digits))};
  }

  std::optional<Tuple> tuple(const json& j, const std::string& path) {
    if (!j.is_array()) {
      error(path, "expected an array of element references");
      return std::nullopt;
    }
    Tuple t;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto e = element_ref(j[i], path + "[" + std::to_string(i) + "]");
      if (e) {
        t.push_back(*e);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return t;
  }

  std::optional<MultiModel> decode_full(const json& doc) {
    MultiModel mm;
    std::vector<Sort> sorts;
    if (const auto* arr = array_field(doc, "sorts", "$", true)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const auto path = "$.sorts[" + std::to_string(i) + "]";
        const auto& s = (*arr)[i];
        if (!s.is_object() || !s.contains("name") || !s.contains("size")) {
          error(path, "a sort is {\"name\": ..., \"size\": ...}");
          continue;
        }
        auto name = string(s.at("name"), path + ".name");
        auto size = index(s.at("size"), path + ".size");
        if (name && name->find_first_of(": \t\n();,") != std::string::npos) {
          error(path + ".name", "sort names may not contain ':', whitespace, ';', ',' or parentheses");
        }
        if (name && size) sorts.push_back(Sort{*name, *size});
      }
    }
    if (!errors_.empty()) return std::nullopt;
    domain_ = SortedDomain(std::move(sorts));
    mm.algebra.domain = domain_;

    if (const auto* arr = array_field(doc, "operations", "$", false)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const auto path = "$.operations[" + std::to_string(i) + "]";
        const auto& o = (*arr)[i];
        if (!o.is_object() || !o.contains("name") || !o.contains("signature")) {
          error(path, "an operation is {\"name\", \"signature\", \"table\"}");
          continue;
        }
        OperationTable op;
        if (auto name = string(o.at("name"), path + ".name")) op.name = *name;
        const auto& sig = o.at("signature");
        if (!sig.is_array() || sig.empty()) {
          error(path + ".signature", "expected [argument sorts..., result sort]");
          continue;
        }
        for (std::size_t k = 0; k < sig.size(); ++k) {
          auto s = sort_ref(sig[k], path + ".signature[" + std::to_string(k) + "]");
          if (!s) continue;
          if (k + 1 == sig.size()) {
            op.result_sort = *s;
          } else {
            op.arg_sorts.push_back(*s);
          }
        }
        if (const auto* table = array_field(o, "table", path, true)) {
          for (std::size_t r = 0; r < table->size(); ++r) {
            const auto rpath = path + ".table[" + std::to_string(r) + "]";
            const auto& row = (*table)[r];
            if (!row.is_object() || !row.contains("args") || !row.contains("result")) {
              error(rpath, "a row is {\"args\": [...], \"result\": ...}");
              continue;
            }
            auto args = tuple(row.at("args"), rpath + ".args");
            auto result = element_ref(row.at("result"), rpath + ".result");
            if (args && result) op.rows.push_back(OperationRow{*args, *result});
          }
        }
        mm.algebra.operations.push_back(std::move(op));
      }
    }

    if (const auto* arr = array_field(doc, "relations", "$", false)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const auto path = "$.relations[" + std::to_string(i) + "]";
        const auto& r = (*arr)[i];
        if (!r.is_object() || !r.contains("name") || !r.contains("signature") ||
            !r.at("signature").is_array()) {
          error(path, "a relation is {\"name\": ..., \"signature\": [sorts...]}");
          continue;
        }
        RelationSymbol rel;
        if (auto name = string(r.at("name"), path + ".name")) rel.name = *name;
        const auto& sig = r.at("signature");
        for (std::size_t k = 0; k < sig.size(); ++k) {
          if (auto s = sort_ref(sig[k], path + ".signature[" + std::to_string(k) + "]")) {
            rel.signature.push_back(*s);
          }
        }
        mm.relations.push_back(std::move(rel));
      }
    }

    if (const auto* arr = array_field(doc, "interpretations", "$", true)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        const auto path = "$.interpretations[" + std::to_string(i) + "]";
        const auto& f = (*arr)[i];
        if (!f.is_object() || !f.contains("label") || !f.contains("tuples") ||
            !f.at("tuples").is_object()) {
          error(path, "an interpretation is {\"label\": ..., \"tuples\": {relation: [...]}}");
          continue;
        }
        Interpretation interp;
        if (auto label = string(f.at("label"), path + ".label")) interp.label = *label;
        for (const auto& [name, tuples] : f.at("tuples").items()) {
          const auto tpath = path + ".tuples." + name;
          auto& list = interp.tuples[name];
          if (!tuples.is_array()) {
            error(tpath, "expected an array of tuples");
            continue;
          }
          for (std::size_t k = 0; k < tuples.size(); ++k) {
            if (auto t = tuple(tuples[k], tpath + "[" + std::to_string(k) + "]")) {
              list.push_back(std::move(*t));
            }
          }
        }
        mm.interpretations.push_back(std::move(interp));
      }
    }
    if (!errors_.empty()) return std::nullopt;
    return mm;
  }

  SortedDomain domain_;
  ValidationReport errors_;
};

ordered_json element_json(const SortedDomain& domain, const Element& e) {
  if (domain.sort_count() == 1) return e.index;
  return domain.name(e.sort) + ":" + std::to_string(e.index);
}

ordered_json tuple_json(const SortedDomain& domain, const Tuple& t) {
  auto out = ordered_json::array();
  for (const auto& e : t) out.push_back(element_json(domain, e));
  return out;
}

}  // namespace

DecodeResult decode_model(const json& doc) { return Decoder().run(doc); }

DecodeResult parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    DecodeResult out;
    out.violations.push_back({"$", std::string("JSON parse error: ") + e.what()});
    return out;
  }
  return decode_model(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

DecodeResult load_model_file(const std::filesystem::path& path) {
  if (std::filesystem::is_directory(path)) throw IoError("'" + path.string() + "' is a directory");
  return parse_model(read_text_file(path));
}

ordered_json encode_model(const MultiModel& input) {
  const auto mm = canonicalized(input);
  const auto& domain = mm.domain();
  ordered_json doc;
  auto sorts = ordered_json::array();
  for (const auto& s : domain.sorts()) sorts.push_back({{"name", s.name}, {"size", s.size}});
  doc["sorts"] = std::move(sorts);

  auto ops = ordered_json::array();
  for (const auto& op : mm.algebra.operations) {
    auto sig = ordered_json::array();
    for (auto s : op.arg_sorts) sig.push_back(domain.name(s));
    sig.push_back(domain.name(op.result_sort));
    auto rows = op.rows;
    std::sort(rows.begin(), rows.end(),
              [](const OperationRow& a, const OperationRow& b) { return a.args < b.args; });
    auto table = ordered_json::array();
    for (const auto& row : rows) {
      table.push_back({{"args", tuple_json(domain, row.args)},
                       {"result", element_json(domain, row.result)}});
    }
    doc["operations"].push_back({{"name", op.name}, {"signature", sig}, {"table", table}});
  }
  if (!doc.contains("operations")) doc["operations"] = ordered_json::array();

  auto rels = ordered_json::array();
  for (const auto& r : mm.relations) {
    auto sig = ordered_json::array();
    for (auto s : r.signature) sig.push_back(domain.name(s));
    rels.push_back({{"name", r.name}, {"signature", sig}});
  }
  doc["relations"] = std::move(rels);

  auto interps = ordered_json::array();
  for (const auto& f : mm.interpretations) {
    ordered_json tuples = ordered_json::object();
    for (const auto& r : mm.relations) {
      auto list = ordered_json::array();
      auto it = f.tuples.find(r.name);
      if (it != f.tuples.end()) {
        for (const auto& t : it->second) list.push_back(tuple_json(domain, t));
      }
      tuples[r.name] = std::move(list);
    }
    interps.push_back({{"label", f.label}, {"tuples", std::move(tuples)}});
  }
  doc["interpretations"] = std::move(interps);
  return doc;
}

namespace {

bool is_scalar_array(const ordered_json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(),
                                      [](const ordered_json& e) { return e.is_structured(); });
}

// Scalars, scalar arrays, and objects whose values are all of those.
bool fits_one_line(const ordered_json& j) {
  if (!j.is_structured() || j.empty() || is_scalar_array(j)) return true;
  if (!j.is_object()) return false;
  return std::all_of(j.begin(), j.end(), [](const ordered_json& v) {
    return !v.is_structured() || v.empty() || is_scalar_array(v);
  });
}

void one_line(const ordered_json& j, std::string& out) {
  if (!j.is_structured() || j.empty()) {
    out += j.dump();
    return;
  }
  const bool object = j.is_object();
  out += object ? "{" : "[";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ", ";
    first = false;
    if (object) out += ordered_json(it.key()).dump() + ": ";
    one_line(*it, out);
  }
  out += object ? "}" : "]";
}

// Like dump(2), but small leaves (tuples, table rows, sort entries) stay on
// one line.
void pretty(const ordered_json& j, int depth, std::string& out) {
  if (fits_one_line(j)) {
    one_line(j, out);
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += ordered_json(it.key()).dump() + ": ";
    pretty(*it, depth + 1, out);
  }
  out += "\n" + std::string(2 * depth, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump_model(const MultiModel& mm) {
  std::string out;
  pretty(encode_model(mm), 0, out);
  return out + "\n";
}

ordered_json permutation_to_json(const SortedDomain& domain, const Permutation& p) {
  ordered_json out = ordered_json::object();
  const auto per = p.per_sort(domain);
  for (std::size_t s = 0; s < domain.sort_count(); ++s) out[domain.name(s)] = per[s];
  return out;
}

Permutation permutation_from_json(const SortedDomain& domain, const json& j) {
  if (j.is_string()) return parse_cycles(domain, j.get<std::string>());
  if (!j.is_object()) throw ParseError("a permutation is an object of per-sort image arrays");
  std::vector<std::vector<Point>> per(domain.sort_count());
  for (std::size_t s = 0; s < domain.sort_count(); ++s) {
    if (!j.contains(domain.name(s))) {
      throw ParseError("permutation has no image array for sort '" + domain.name(s) + "'");
    }
    const auto& arr = j.at(domain.name(s));
    if (!arr.is_array()) throw ParseError("image for sort '" + domain.name(s) + "' must be an array");
    for (const auto& v : arr) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ParseError("image entries must be non-negative integers");
      }
      per[s].push_back(v.get<Point>());
    }
  }
  if (j.size() != domain.sort_count()) throw ParseError("permutation names unknown sorts");
  try {
    return Permutation::from_sorts(domain, per);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace autoequiv
