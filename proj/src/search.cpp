#include "autoequiv/search.hpp"

#include <algorithm>
#include <map>

#include "autoequiv/errors.hpp"
#include "tables.hpp"

namespace autoequiv {
namespace {

using detail::DenseOperation;
using detail::TupleMembership;
using detail::to_points;

// Per-point degree profile; equal profiles are necessary for p -> q.
using Profile = std::vector<std::vector<std::uint64_t>>;

void add_operation_profile(Profile& prof, const Algebra& a, const std::vector<std::size_t>& order) {
  const auto& domain = a.domain;
  for (auto k : order) {
    const auto& op = a.operations[k];
    const bool homogeneous =
        std::all_of(op.arg_sorts.begin(), op.arg_sorts.end(),
                    [&](std::size_t s) { return s == op.result_sort; }) &&
        !op.arg_sorts.empty();
    std::vector<std::uint64_t> preimages(domain.point_count(), 0);
    std::vector<std::uint64_t> idempotent(domain.point_count(), 0);
    for (const auto& row : op.rows) {
      const auto r = to_point(domain, row.result);
      ++preimages[r];
      if (homogeneous &&
          std::all_of(row.args.begin(), row.args.end(), [&](Element e) { return e == row.args[0]; }) &&
          row.args[0] == row.result) {
        idempotent[r] = 1;
      }
    }
    for (Point p = 0; p < domain.point_count(); ++p) {
      prof[p].push_back(preimages[p]);
      prof[p].push_back(idempotent[p]);
    }
  }
}

void add_relation_profile(Profile& prof, const SortedDomain& domain, const std::vector<Tuple>& tuples,
                          std::size_t arity) {
  std::vector<std::uint64_t> counts(domain.point_count() * (arity + 1), 0);
  for (const auto& t : tuples) {
    for (std::size_t i = 0; i < arity; ++i) ++counts[to_point(domain, t[i]) * (arity + 1) + i];
    if (std::all_of(t.begin(), t.end(), [&](Element e) { return e == t[0]; })) {
      ++counts[to_point(domain, t[0]) * (arity + 1) + arity];
    }
  }
  for (Point p = 0; p < domain.point_count(); ++p) {
    for (std::size_t i = 0; i <= arity; ++i) prof[p].push_back(counts[p * (arity + 1) + i]);
  }
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

class Engine {
 public:
  Engine(const SortedDomain& domain, NodeBudget& nodes)
      : domain_(domain),
        nodes_(nodes),
        n_(domain.point_count()),
        image_(n_, 0),
        used_(n_, false),
        triggers_(n_) {}

  // Rows of a's operations must map onto b's; b's ops matched by name.
  void add_operations(const Algebra& a, const Algebra& b) {
    const auto match = detail::match_operations(a, b);
    for (std::size_t k = 0; k < a.operations.size(); ++k) {
      const auto table = static_cast<std::uint32_t>(ops_.size());
      ops_.emplace_back(b.operations[match[k]], domain_);
      for (const auto& row : a.operations[k].rows) {
        auto pts = to_points(domain_, row.args);
        const auto result = to_point(domain_, row.result);
        Point trigger = result;
        for (auto p : pts) trigger = std::max(trigger, p);
        add_check(trigger, Check{false, table, result, pts});
      }
    }
  }

  void add_relation(const std::vector<Tuple>& source, TupleMembership target) {
    const auto table = static_cast<std::uint32_t>(rels_.size());
    rels_.push_back(std::move(target));
    for (const auto& t : source) {
      auto pts = to_points(domain_, t);
      const auto trigger = *std::max_element(pts.begin(), pts.end());
      add_check(trigger, Check{true, table, 0, pts});
    }
  }

  void set_profiles(Profile source, Profile target) {
    source_profile_ = std::move(source);
    target_profile_ = std::move(target);
  }

  void run(const PermutationVisitor& visit, const PairFilter& filter) {
    visit_ = &visit;
    filter_ = filter ? &filter : nullptr;
    stop_ = false;
    search(0);
  }

 private:
  struct Check {
    bool relation;
    std::uint32_t table;
    Point result;
    std::vector<Point> points;
  };

  void add_check(Point trigger, Check c) { triggers_[trigger].push_back(std::move(c)); }

  bool checks_hold(Point p) {
    for (const auto& c : triggers_[p]) {
      mapped_.resize(c.points.size());
      for (std::size_t i = 0; i < c.points.size(); ++i) mapped_[i] = image_[c.points[i]];
      if (c.relation) {
        if (!rels_[c.table].contains(mapped_)) return false;
      } else if (ops_[c.table].apply(mapped_) != image_[c.result]) {
        return false;
      }
    }
    return true;
  }

  void search(Point p) {
    if (p == n_) {
      if (!(*visit_)(Permutation(image_))) stop_ = true;
      return;
    }
    const auto s = domain_.sort_of(p);
    const auto lo = domain_.offset(s);
    const auto hi = lo + static_cast<Point>(domain_.size(s));
    for (Point q = lo; q < hi && !stop_; ++q) {
      if (used_[q]) continue;
      if (!source_profile_.empty() && source_profile_[p] != target_profile_[q]) continue;
      if (filter_ && !(*filter_)(p, q, std::span<const Point>(image_.data(), p))) continue;
      nodes_.spend();
      image_[p] = q;
      used_[q] = true;
      if (checks_hold(p)) search(p + 1);
      used_[q] = false;
    }
  }

  const SortedDomain& domain_;
  NodeBudget& nodes_;
  Point n_;
  std::vector<Point> image_;
  std::vector<bool> used_;
  std::vector<std::vector<Check>> triggers_;
  std::vector<DenseOperation> ops_;
  std::vector<TupleMembership> rels_;
  std::vector<Point> mapped_;
  Profile source_profile_;
  Profile target_profile_;
  const PermutationVisitor* visit_ = nullptr;
  const PairFilter* filter_ = nullptr;
  bool stop_ = false;
};

PermGroup collect_group(Engine& engine, const SortedDomain& domain, std::size_t cap) {
  std::vector<Permutation> elements;
  const PermutationVisitor visit = [&](const Permutation& p) {
    if (elements.size() >= cap) {
      throw ResourceError("automorphism group exceeds the cap of " + std::to_string(cap) +
                          " elements");
    }
    elements.push_back(p);
    return true;
  };
  engine.run(visit, {});
  return PermGroup::from_elements(domain, std::move(elements));
}

void require_aligned(const Algebra& a, const Algebra& b) {
  if (!(a.domain == b.domain)) {
    throw DomainMismatch("target domain must list the source's sorts in the same order");
  }
  if (auto why = signature_mismatch(a, b)) throw PreconditionError(*why);
}

}  // namespace

PermGroup algebra_automorphisms(const Algebra& algebra, NodeBudget& nodes, std::size_t group_cap) {
  require_valid(algebra);
  Engine engine(algebra.domain, nodes);
  engine.add_operations(algebra, algebra);
  Profile prof(algebra.domain.point_count());
  add_operation_profile(prof, algebra, identity_order(algebra.operations.size()));
  engine.set_profiles(prof, prof);
  return collect_group(engine, algebra.domain, group_cap);
}

PermGroup algebra_automorphisms(const Algebra& algebra, const SearchBudget& budget) {
  NodeBudget nodes(budget.max_nodes);
  return algebra_automorphisms(algebra, nodes, budget.group_cap);
}

PermGroup model_automorphisms(const Model& model, NodeBudget& nodes, std::size_t group_cap,
                              AutReading reading) {
  require_valid(model);
  const auto& domain = model.domain();
  Engine engine(domain, nodes);
  Profile prof(domain.point_count());
  if (reading == AutReading::within_algebra) {
    engine.add_operations(model.algebra, model.algebra);
    add_operation_profile(prof, model.algebra, identity_order(model.algebra.operations.size()));
  }
  for (const auto& r : model.relations) {
    const auto& tuples = model.interpretation.tuples.at(r.name);
    engine.add_relation(tuples, TupleMembership(r, domain, tuples));
    add_relation_profile(prof, domain, tuples, r.signature.size());
  }
  engine.set_profiles(prof, prof);
  return collect_group(engine, domain, group_cap);
}

PermGroup model_automorphisms(const Model& model, const SearchBudget& budget, AutReading reading) {
  NodeBudget nodes(budget.max_nodes);
  return model_automorphisms(model, nodes, budget.group_cap, reading);
}

std::optional<std::string> signature_mismatch(const Algebra& a, const Algebra& b) {
  if (!same_sorts(a.domain, b.domain)) return "domains differ in sort names or cardinalities";
  if (a.operations.size() != b.operations.size()) return "operation counts differ";
  for (const auto& op : a.operations) {
    auto it = std::find_if(b.operations.begin(), b.operations.end(),
                           [&](const OperationTable& o) { return o.name == op.name; });
    if (it == b.operations.end()) return "operation '" + op.name + "' is missing from the second algebra";
    auto sort_name = [](const SortedDomain& d, std::size_t s) {
      return s < d.sort_count() ? d.name(s) : std::string("?");
    };
    bool same = it->arg_sorts.size() == op.arg_sorts.size() &&
                sort_name(a.domain, op.result_sort) == sort_name(b.domain, it->result_sort);
    for (std::size_t i = 0; same && i < op.arg_sorts.size(); ++i) {
      same = sort_name(a.domain, op.arg_sorts[i]) == sort_name(b.domain, it->arg_sorts[i]);
    }
    if (!same) return "operation '" + op.name + "' has different sort signatures";
  }
  return std::nullopt;
}

void for_each_isomorphism(const Algebra& a, const Algebra& b, NodeBudget& nodes,
                          const PermutationVisitor& visit, const PairFilter& filter) {
  require_aligned(a, b);
  Engine engine(a.domain, nodes);
  engine.add_operations(a, b);
  Profile pa(a.domain.point_count());
  Profile pb(b.domain.point_count());
  const auto match = detail::match_operations(a, b);
  add_operation_profile(pa, a, identity_order(a.operations.size()));
  add_operation_profile(pb, b, match);
  engine.set_profiles(std::move(pa), std::move(pb));
  engine.run(visit, filter);
}

void for_each_bijection(const SortedDomain& domain, NodeBudget& nodes,
                        const PermutationVisitor& visit, const PairFilter& filter) {
  Engine engine(domain, nodes);
  engine.run(visit, filter);
}

IsomorphismList algebra_isomorphisms(const Algebra& a, const Algebra& b,
                                     const SearchBudget& budget) {
  require_valid(a);
  require_valid(b);
  IsomorphismList out;
  if (auto why = signature_mismatch(a, b)) {
    out.note = *why;
    return out;
  }
  const auto aligned = reorder_sorts(b, a.domain);
  NodeBudget nodes(budget.max_nodes);
  for_each_isomorphism(a, aligned, nodes, [&](const Permutation& mu) {
    if (budget.max_results && out.isomorphisms.size() >= *budget.max_results) {
      out.truncated = true;
      return false;
    }
    out.isomorphisms.push_back(mu);
    return true;
  });
  return out;
}

bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Permutation& mu) {
  if (!(a.domain == b.domain) || signature_mismatch(a, b)) return false;
  if (!respects_sorts(a.domain, mu)) return false;
  const auto match = detail::match_operations(a, b);
  std::vector<Point> mapped;
  for (std::size_t k = 0; k < a.operations.size(); ++k) {
    const DenseOperation target(b.operations[match[k]], b.domain);
    for (const auto& row : a.operations[k].rows) {
      mapped.clear();
      for (const auto& e : row.args) mapped.push_back(mu(to_point(a.domain, e)));
      if (target.apply(mapped) != mu(to_point(a.domain, row.result))) return false;
    }
  }
  return true;
}

bool is_algebra_automorphism(const Algebra& algebra, const Permutation& sigma) {
  return is_algebra_isomorphism(algebra, algebra, sigma);
}

}  // namespace autoequiv
