#include "autoequiv/model.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "autoequiv/errors.hpp"

namespace autoequiv {

SortedDomain::SortedDomain(std::vector<Sort> sorts) : sorts_(std::move(sorts)) {
  offsets_.reserve(sorts_.size());
  std::size_t total = 0;
  for (const auto& s : sorts_) {
    offsets_.push_back(static_cast<Point>(total));
    total += s.size;
  }
  point_count_ = total;
}

std::optional<std::size_t> SortedDomain::find_sort(std::string_view name) const {
  for (std::size_t i = 0; i < sorts_.size(); ++i) {
    if (sorts_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t SortedDomain::sort_of(Point p) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), p);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

Point to_point(const SortedDomain& domain, Element e) { return domain.offset(e.sort) + e.index; }

Element to_element(const SortedDomain& domain, Point p) {
  const auto s = domain.sort_of(p);
  return Element{static_cast<std::uint32_t>(s), p - domain.offset(s)};
}

Model MultiModel::model(std::size_t i) const {
  return Model{algebra, relations, interpretations.at(i)};
}

MultiModel MultiModel::from_model(const Model& m) {
  return MultiModel{m.algebra, m.relations, {m.interpretation}};
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "[\"";
  out += s;
  out += "\"]";
  return out;
}

std::string format_element(const SortedDomain& domain, Element e) {
  std::ostringstream os;
  if (e.sort < domain.sort_count()) {
    os << domain.name(e.sort);
  } else {
    os << "?" << e.sort;
  }
  os << ":" << e.index;
  return os.str();
}

bool element_in_sort(const SortedDomain& domain, Element e, std::size_t sort) {
  return e.sort == sort && sort < domain.sort_count() && e.index < domain.size(sort);
}

// Saturating product, used only to compare counts during validation.
std::uint64_t saturating_product(const std::vector<std::size_t>& sorts, const SortedDomain& domain) {
  std::uint64_t n = 1;
  for (auto s : sorts) {
    const std::uint64_t k = domain.size(s);
    if (k != 0 && n > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    n *= k;
  }
  return n;
}

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 20;

void check_domain(const SortedDomain& domain, ValidationReport& out) {
  std::set<std::string> seen;
  if (domain.sort_count() == 0) out.push_back({"sorts", "domain has no sorts"});
  std::uint64_t total = 0;
  for (const auto& s : domain.sorts()) {
    const auto path = "sorts" + quoted(s.name);
    if (s.name.empty()) out.push_back({path, "sort name is empty"});
    if (!seen.insert(s.name).second) out.push_back({path, "duplicate sort name"});
    if (s.size < 1) out.push_back({path, "cardinality must be at least 1"});
    total += s.size;
  }
  if (total > kMaxPoints) {
    out.push_back({"sorts", "domain has more than " + std::to_string(kMaxPoints) + " elements"});
  }
}

bool sorts_known(const std::vector<std::size_t>& sorts, const SortedDomain& domain) {
  return std::all_of(sorts.begin(), sorts.end(),
                     [&](std::size_t s) { return s < domain.sort_count(); });
}

void check_operations(const Algebra& algebra, ValidationReport& out) {
  const auto& domain = algebra.domain;
  std::set<std::string> seen;
  for (const auto& op : algebra.operations) {
    const auto path = "operations" + quoted(op.name);
    if (op.name.empty()) out.push_back({path, "operation name is empty"});
    if (!seen.insert(op.name).second) out.push_back({path, "duplicate operation name"});
    if (!sorts_known(op.arg_sorts, domain) || op.result_sort >= domain.sort_count()) {
      out.push_back({path + ".signature", "signature refers to an unknown sort"});
      continue;
    }
    std::set<Tuple> rows_seen;
    for (const auto& row : op.rows) {
      const auto row_path = path + ".table" + format_tuple(domain, row.args);
      if (row.args.size() != op.arg_sorts.size()) {
        std::ostringstream msg;
        msg << "row has " << row.args.size() << " arguments, expected " << op.arg_sorts.size();
        out.push_back({row_path, msg.str()});
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < row.args.size(); ++i) {
        if (!element_in_sort(domain, row.args[i], op.arg_sorts[i])) {
          out.push_back({row_path, "argument " + std::to_string(i) + " (" +
                                       format_element(domain, row.args[i]) +
                                       ") is not an element of sort " +
                                       domain.name(op.arg_sorts[i])});
          ok = false;
        }
      }
      if (!element_in_sort(domain, row.result, op.result_sort)) {
        out.push_back({row_path, "result " + format_element(domain, row.result) +
                                     " is not an element of sort " + domain.name(op.result_sort)});
      }
      if (ok && !rows_seen.insert(row.args).second) {
        out.push_back({row_path, "duplicate row for these arguments"});
      }
    }
    const auto expected = saturating_product(op.arg_sorts, domain);
    if (rows_seen.size() < expected) {
      std::ostringstream msg;
      msg << "table is not total: " << (expected - rows_seen.size()) << " of " << expected
          << " argument tuples have no row";
      out.push_back({path + ".table", msg.str()});
    }
  }
}

void check_relations(const std::vector<RelationSymbol>& relations, const SortedDomain& domain,
                     ValidationReport& out) {
  std::set<std::string> seen;
  for (const auto& r : relations) {
    const auto path = "relations" + quoted(r.name);
    if (r.name.empty()) out.push_back({path, "relation name is empty"});
    if (!seen.insert(r.name).second) out.push_back({path, "duplicate relation name"});
    if (r.signature.empty()) out.push_back({path + ".signature", "signature is empty"});
    if (!sorts_known(r.signature, domain)) {
      out.push_back({path + ".signature", "signature refers to an unknown sort"});
    }
  }
}

void check_interpretation(const Interpretation& f, const std::vector<RelationSymbol>& relations,
                          const SortedDomain& domain, const std::string& base,
                          ValidationReport& out) {
  std::unordered_map<std::string, const RelationSymbol*> by_name;
  for (const auto& r : relations) by_name.emplace(r.name, &r);
  for (const auto& r : relations) {
    if (!f.tuples.contains(r.name)) {
      out.push_back({base + ".tuples" + quoted(r.name), "relation has no entry"});
    }
  }
  for (const auto& [name, tuples] : f.tuples) {
    const auto path = base + ".tuples" + quoted(name);
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      out.push_back({path, "unknown relation symbol"});
      continue;
    }
    const auto& sig = it->second->signature;
    if (!sorts_known(sig, domain)) continue;
    std::set<Tuple> seen;
    for (const auto& t : tuples) {
      const auto tpath = path + format_tuple(domain, t);
      if (t.size() != sig.size()) {
        std::ostringstream msg;
        msg << "tuple has arity " << t.size() << ", expected " << sig.size();
        out.push_back({tpath, msg.str()});
        continue;
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!element_in_sort(domain, t[i], sig[i])) {
          out.push_back({tpath, "position " + std::to_string(i) + " (" +
                                    format_element(domain, t[i]) +
                                    ") is not an element of sort " + domain.name(sig[i])});
        }
      }
      if (!seen.insert(t).second) out.push_back({tpath, "duplicate tuple"});
    }
  }
}

ValidationReport finish(ValidationReport r) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

[[noreturn]] void throw_report(const ValidationReport& r) {
  std::ostringstream os;
  os << "invalid input (" << r.size() << " violation" << (r.size() == 1 ? "" : "s") << ")";
  for (std::size_t i = 0; i < r.size() && i < 5; ++i) {
    os << "; " << r[i].path << ": " << r[i].message;
  }
  throw ValidationError(os.str());
}

}  // namespace

std::string format_tuple(const SortedDomain& domain, const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += format_element(domain, t[i]);
  }
  out += ")";
  return out;
}

ValidationReport validate(const SortedDomain& domain) {
  ValidationReport r;
  check_domain(domain, r);
  return finish(std::move(r));
}

ValidationReport validate(const Algebra& algebra) {
  ValidationReport r;
  check_domain(algebra.domain, r);
  check_operations(algebra, r);
  return finish(std::move(r));
}

ValidationReport validate(const Model& model) {
  ValidationReport r;
  check_domain(model.domain(), r);
  check_operations(model.algebra, r);
  check_relations(model.relations, model.domain(), r);
  check_interpretation(model.interpretation, model.relations, model.domain(),
                       "interpretation" + quoted(model.interpretation.label), r);
  return finish(std::move(r));
}

ValidationReport validate(const MultiModel& mm) {
  ValidationReport r;
  check_domain(mm.domain(), r);
  check_operations(mm.algebra, r);
  check_relations(mm.relations, mm.domain(), r);
  if (mm.interpretations.empty()) {
    r.push_back({"interpretations", "at least one interpretation is required"});
  }
  std::set<std::string> labels;
  for (const auto& f : mm.interpretations) {
    const auto base = "interpretations" + quoted(f.label);
    if (!labels.insert(f.label).second) r.push_back({base, "duplicate interpretation label"});
    check_interpretation(f, mm.relations, mm.domain(), base, r);
  }
  return finish(std::move(r));
}

void require_valid(const Algebra& algebra) {
  if (auto r = validate(algebra); !r.empty()) throw_report(r);
}

void require_valid(const Model& model) {
  if (auto r = validate(model); !r.empty()) throw_report(r);
}

void require_valid(const MultiModel& mm) {
  if (auto r = validate(mm); !r.empty()) throw_report(r);
}

std::uint64_t tuple_space_size(const RelationSymbol& relation, const SortedDomain& domain) {
  std::uint64_t n = 1;
  for (auto s : relation.signature) {
    if (s >= domain.sort_count()) {
      throw SignatureError("relation '" + relation.name + "' refers to unknown sort index " +
                           std::to_string(s));
    }
    const std::uint64_t k = domain.size(s);
    if (k != 0 && n > std::numeric_limits<std::uint64_t>::max() / k) {
      throw ResourceError("tuple space of relation '" + relation.name + "' overflows 64 bits");
    }
    n *= k;
  }
  return n;
}

bool same_sorts(const SortedDomain& a, const SortedDomain& b) {
  if (a.sort_count() != b.sort_count()) return false;
  for (const auto& s : a.sorts()) {
    auto j = b.find_sort(s.name);
    if (!j || b.size(*j) != s.size) return false;
  }
  return true;
}

namespace {

// old sort index (in m's domain) -> new sort index (reference order)
std::vector<std::size_t> sort_mapping(const SortedDomain& from, const SortedDomain& reference) {
  if (!same_sorts(from, reference)) {
    throw DomainMismatch("domains differ in sort names or cardinalities");
  }
  std::vector<std::size_t> map(from.sort_count());
  for (std::size_t i = 0; i < from.sort_count(); ++i) map[i] = *reference.find_sort(from.name(i));
  return map;
}

void remap(Element& e, const std::vector<std::size_t>& map) {
  if (e.sort < map.size()) e.sort = static_cast<std::uint32_t>(map[e.sort]);
}

void remap(std::size_t& s, const std::vector<std::size_t>& map) {
  if (s < map.size()) s = map[s];
}

void remap(Interpretation& f, const std::vector<std::size_t>& map) {
  for (auto& [_, tuples] : f.tuples) {
    for (auto& t : tuples) {
      for (auto& e : t) remap(e, map);
    }
  }
}

void remap(std::vector<RelationSymbol>& relations, const std::vector<std::size_t>& map) {
  for (auto& r : relations) {
    for (auto& s : r.signature) remap(s, map);
  }
}

}  // namespace

Algebra reorder_sorts(const Algebra& a, const SortedDomain& reference) {
  const auto map = sort_mapping(a.domain, reference);
  Algebra out{reference, a.operations};
  for (auto& op : out.operations) {
    for (auto& s : op.arg_sorts) remap(s, map);
    remap(op.result_sort, map);
    for (auto& row : op.rows) {
      for (auto& e : row.args) remap(e, map);
      remap(row.result, map);
    }
  }
  return out;
}

Model reorder_sorts(const Model& m, const SortedDomain& reference) {
  const auto map = sort_mapping(m.domain(), reference);
  Model out{reorder_sorts(m.algebra, reference), m.relations, m.interpretation};
  remap(out.relations, map);
  remap(out.interpretation, map);
  return out;
}

MultiModel reorder_sorts(const MultiModel& mm, const SortedDomain& reference) {
  const auto map = sort_mapping(mm.domain(), reference);
  MultiModel out{reorder_sorts(mm.algebra, reference), mm.relations, mm.interpretations};
  remap(out.relations, map);
  for (auto& f : out.interpretations) remap(f, map);
  return out;
}

MultiModel canonicalized(MultiModel mm) {
  for (auto& f : mm.interpretations) {
    for (auto& [_, tuples] : f.tuples) std::sort(tuples.begin(), tuples.end());
  }
  return mm;
}

}  // namespace autoequiv
