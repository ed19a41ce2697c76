#include "autoequiv/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "autoequiv/errors.hpp"

namespace autoequiv {
namespace {

void check_caps(const SortedDomain& domain) {
  std::uint64_t total = 1;
  for (const auto& s : domain.sorts()) {
    if (s.size > kOracleMaxSortSize) {
      throw ResourceError("oracle refuses sort '" + s.name + "' of size " +
                          std::to_string(s.size) + " (cap " +
                          std::to_string(kOracleMaxSortSize) + ")");
    }
    for (std::size_t k = 2; k <= s.size; ++k) total *= k;
    if (total > kOracleMaxBijections) {
      throw ResourceError("oracle refuses a domain with more than " +
                          std::to_string(kOracleMaxBijections) + " sort-wise bijections");
    }
  }
}

// Calls visit on every sort-wise bijection in lexicographic order of the
// concatenated image arrays; stops when visit returns false.
void enumerate_bijections(const SortedDomain& domain,
                          const std::function<bool(const Permutation&)>& visit) {
  check_caps(domain);
  std::vector<std::vector<Point>> local(domain.sort_count());
  for (std::size_t s = 0; s < local.size(); ++s) {
    local[s].resize(domain.size(s));
    std::iota(local[s].begin(), local[s].end(), Point{0});
  }
  while (true) {
    if (!visit(Permutation::from_sorts(domain, local))) return;
    std::size_t s = local.size();
    while (true) {
      if (s == 0) return;
      --s;
      if (std::next_permutation(local[s].begin(), local[s].end())) break;
    }
  }
}

Tuple apply(const SortedDomain& domain, const Permutation& p, const Tuple& t) {
  Tuple out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back(p(domain, e));
  return out;
}

// True when signatures agree by operation name and sort names.
bool same_operations(const Algebra& a, const Algebra& b) {
  if (a.operations.size() != b.operations.size()) return false;
  for (const auto& op : a.operations) {
    bool found = false;
    for (const auto& other : b.operations) {
      if (other.name != op.name) continue;
      found = other.arg_sorts == op.arg_sorts && other.result_sort == op.result_sort;
    }
    if (!found) return false;
  }
  return true;
}

// mu(op_A(x)) == op_B(mu(x)) for every operation and row. B in A's sort order.
bool maps_operations(const Algebra& a, const Algebra& b, const Permutation& mu) {
  for (const auto& op : a.operations) {
    const auto& other = *std::find_if(b.operations.begin(), b.operations.end(),
                                      [&](const OperationTable& o) { return o.name == op.name; });
    std::map<Tuple, Element> table;
    for (const auto& row : other.rows) table.emplace(row.args, row.result);
    for (const auto& row : op.rows) {
      if (table.at(apply(a.domain, mu, row.args)) != mu(a.domain, row.result)) return false;
    }
  }
  return true;
}

bool preserves_relations(const Model& m, const Permutation& s) {
  for (const auto& [name, tuples] : m.interpretation.tuples) {
    const std::set<Tuple> set(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
      if (!set.contains(apply(m.domain(), s, t))) return false;
    }
  }
  return true;
}

bool conjugates(const std::vector<Permutation>& g, const std::vector<Permutation>& h,
                const Permutation& mu) {
  if (g.size() != h.size()) return false;
  const auto mu_inv = invert(mu);
  const std::set<Permutation> target(h.begin(), h.end());
  for (const auto& x : g) {
    if (!target.contains(compose(compose(mu, x), mu_inv))) return false;
  }
  return true;
}

}  // namespace

std::vector<Permutation> oracle_algebra_automorphisms(const Algebra& algebra) {
  require_valid(algebra);
  std::vector<Permutation> out;
  enumerate_bijections(algebra.domain, [&](const Permutation& s) {
    if (maps_operations(algebra, algebra, s)) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Permutation> oracle_model_automorphisms(const Model& model) {
  require_valid(model);
  std::vector<Permutation> out;
  enumerate_bijections(model.domain(), [&](const Permutation& s) {
    if (maps_operations(model.algebra, model.algebra, s) && preserves_relations(model, s)) {
      out.push_back(s);
    }
    return true;
  });
  return out;
}

std::optional<Permutation> oracle_algebra_equiv(const Algebra& a, const Algebra& b) {
  if (!same_sorts(a.domain, b.domain)) return std::nullopt;
  const auto other = reorder_sorts(b, a.domain);
  const auto aut_a = oracle_algebra_automorphisms(a);
  const auto aut_b = oracle_algebra_automorphisms(other);
  if (aut_a.size() != aut_b.size()) return std::nullopt;
  std::optional<Permutation> found;
  enumerate_bijections(a.domain, [&](const Permutation& delta) {
    if (!conjugates(aut_a, aut_b, delta)) return true;
    found = delta;
    return false;
  });
  return found;
}

std::optional<Permutation> oracle_model_equiv(const Model& m1, const Model& m2) {
  if (!same_sorts(m1.domain(), m2.domain())) return std::nullopt;
  const auto other = reorder_sorts(m2, m1.domain());
  if (!same_operations(m1.algebra, other.algebra)) return std::nullopt;
  const auto aut1 = oracle_model_automorphisms(m1);
  const auto aut2 = oracle_model_automorphisms(other);
  if (aut1.size() != aut2.size()) return std::nullopt;
  std::optional<Permutation> found;
  enumerate_bijections(m1.domain(), [&](const Permutation& mu) {
    if (!maps_operations(m1.algebra, other.algebra, mu)) return true;
    if (!conjugates(aut1, aut2, mu)) return true;
    found = mu;
    return false;
  });
  return found;
}

std::optional<MultiModelEquivWitness> oracle_multimodel_equiv(const MultiModel& mm1,
                                                              const MultiModel& mm2) {
  const auto n = mm1.interpretations.size();
  if (n > kOracleMaxInterpretations || mm2.interpretations.size() > kOracleMaxInterpretations) {
    throw ResourceError("oracle refuses more than " + std::to_string(kOracleMaxInterpretations) +
                        " interpretations");
  }
  check_caps(mm1.domain());
  check_caps(mm2.domain());
  if (n != mm2.interpretations.size()) return std::nullopt;
  if (n == 0) {
    // No pairs to check, but Iso(A, B) must still be non-empty.
    if (!same_sorts(mm1.domain(), mm2.domain())) return std::nullopt;
    const auto other = reorder_sorts(mm2.algebra, mm1.domain());
    if (!same_operations(mm1.algebra, other)) return std::nullopt;
    bool iso = false;
    enumerate_bijections(mm1.domain(), [&](const Permutation& mu) {
      iso = maps_operations(mm1.algebra, other, mu);
      return !iso;
    });
    if (!iso) return std::nullopt;
    return MultiModelEquivWitness{};
  }
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Permutation>> pairs;
  auto pair = [&](std::size_t i, std::size_t j) -> const std::optional<Permutation>& {
    auto it = pairs.find({i, j});
    if (it == pairs.end()) {
      it = pairs.emplace(std::pair{i, j}, oracle_model_equiv(mm1.model(i), mm2.model(j))).first;
    }
    return it->second;
  };
  std::vector<std::size_t> alpha(n);
  std::iota(alpha.begin(), alpha.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = pair(i, alpha[i]).has_value();
    if (!ok) continue;
    MultiModelEquivWitness w;
    for (std::size_t i = 0; i < n; ++i) {
      w.alpha.emplace_back(i, alpha[i]);
      w.mus.push_back(*pair(i, alpha[i]));
    }
    return w;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return std::nullopt;
}

}  // namespace autoequiv
