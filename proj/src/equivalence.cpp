#include "autoequiv/equivalence.hpp"

#include <algorithm>
#include <map>

#include "autoequiv/errors.hpp"

namespace autoequiv {

std::string describe(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "automorphically equivalent";
    case Verdict::algebras_not_isomorphic:
      return "algebras are not isomorphic";
    case Verdict::interpretation_counts_differ:
      return "interpretation counts differ";
    case Verdict::unmatched_interpretation:
      return "an interpretation has no automorphically equivalent partner";
    case Verdict::no_perfect_matching:
      return "no perfect matching between interpretations";
    case Verdict::no_shared_conjugator:
      return "no single isomorphism serves every matched pair";
  }
  return "unknown";
}

namespace {

bool conjugates_onto(const PermGroup& g, const PermGroup& h, const Permutation& mu) {
  if (g.order() != h.order()) return false;
  for (const auto& x : g.generators()) {
    if (!h.contains(conjugate(x, mu))) return false;
  }
  return true;
}

// Conjugation invariants checked before any conjugator search.
bool compatible(const PermGroup& g, const PermGroup& h) {
  return g.order() == h.order() && orbit_profile(g) == orbit_profile(h);
}

}  // namespace

std::optional<Permutation> find_conjugator(const Algebra& a, const Algebra& b, const PermGroup& g,
                                           const PermGroup& h, NodeBudget& nodes,
                                           bool require_isomorphism) {
  if (!compatible(g, h)) return std::nullopt;
  const auto og = orbits(g);
  const auto oh = orbits(h);
  const auto& domain = a.domain;
  // A conjugator maps G-orbits onto H-orbits.
  const PairFilter filter = [&](Point p, Point q, std::span<const Point> assigned) {
    if (og.orbit_size[p] != oh.orbit_size[q]) return false;
    const auto lo = domain.offset(domain.sort_of(p));
    for (Point r = lo; r < p; ++r) {
      if ((og.orbit_of[p] == og.orbit_of[r]) != (oh.orbit_of[q] == oh.orbit_of[assigned[r]])) {
        return false;
      }
    }
    return true;
  };
  std::optional<Permutation> found;
  const PermutationVisitor visit = [&](const Permutation& mu) {
    if (conjugates_onto(g, h, mu)) {
      found = mu;
      return false;
    }
    return true;
  };
  if (require_isomorphism) {
    for_each_isomorphism(a, b, nodes, visit, filter);
  } else {
    for_each_bijection(domain, nodes, visit, filter);
  }
  return found;
}

std::optional<Permutation> algebras_automorphically_equivalent(const Algebra& a, const Algebra& b,
                                                               const SearchBudget& budget) {
  require_valid(a);
  require_valid(b);
  if (!same_sorts(a.domain, b.domain)) return std::nullopt;
  const auto aligned = reorder_sorts(b, a.domain);
  NodeBudget nodes(budget.max_nodes);
  const auto aut_a = algebra_automorphisms(a, nodes, budget.group_cap);
  const auto aut_b = algebra_automorphisms(aligned, nodes, budget.group_cap);
  return find_conjugator(a, aligned, aut_a, aut_b, nodes, false);
}

std::optional<ModelEquivWitness> models_automorphically_equivalent(const Model& m1, const Model& m2,
                                                                   const SearchBudget& budget) {
  require_valid(m1);
  require_valid(m2);
  if (signature_mismatch(m1.algebra, m2.algebra)) return std::nullopt;
  const auto aligned = reorder_sorts(m2, m1.domain());
  NodeBudget nodes(budget.max_nodes);
  const auto aut1 = model_automorphisms(m1, nodes, budget.group_cap);
  const auto aut2 = model_automorphisms(aligned, nodes, budget.group_cap);
  auto mu = find_conjugator(m1.algebra, aligned.algebra, aut1, aut2, nodes, true);
  if (!mu) return std::nullopt;
  return ModelEquivWitness{std::move(*mu)};
}

std::optional<std::vector<IndexPair>> bipartite_perfect_matching(std::size_t n,
                                                                 std::span<const IndexPair> edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("matching edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is out of range for n=" + std::to_string(n));
    }
    adj[u].push_back(v);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(n, kNone);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (auto v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (match_right[v] == kNone || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    visited.assign(n, false);
    if (!augment(augment, u)) return std::nullopt;
  }
  std::vector<IndexPair> out(n);
  for (std::size_t v = 0; v < n; ++v) out[match_right[v]] = {match_right[v], v};
  return out;
}

MultiModelDecision decide_multimodel_equivalence(const MultiModel& mm1, const MultiModel& mm2,
                                                 const EquivalenceOptions& options) {
  require_valid(mm1);
  require_valid(mm2);
  MultiModelDecision out;

  // Step 1: the algebras must be isomorphic.
  if (auto why = signature_mismatch(mm1.algebra, mm2.algebra)) {
    out.verdict = Verdict::algebras_not_isomorphic;
    out.note = *why;
    return out;
  }
  const auto other = reorder_sorts(mm2, mm1.domain());
  NodeBudget nodes(options.budget.max_nodes);
  bool isomorphic = false;
  for_each_isomorphism(mm1.algebra, other.algebra, nodes, [&](const Permutation&) {
    isomorphic = true;
    return false;
  });
  if (!isomorphic) {
    out.verdict = Verdict::algebras_not_isomorphic;
    return out;
  }

  // Step 2: alpha needs |F1| = |F2|.
  const auto n = mm1.interpretations.size();
  if (n != other.interpretations.size()) {
    out.verdict = Verdict::interpretation_counts_differ;
    return out;
  }

  // Step 3: every Aut(f) as a subgroup of Aut(A).
  std::vector<PermGroup> aut1, aut2;
  for (std::size_t i = 0; i < n; ++i) {
    aut1.push_back(model_automorphisms(mm1.model(i), nodes, options.budget.group_cap));
  }
  for (std::size_t j = 0; j < n; ++j) {
    aut2.push_back(model_automorphisms(other.model(j), nodes, options.budget.group_cap));
  }

  // Step 4: bipartite graph of model-equivalent pairs, caching each mu.
  std::map<IndexPair, Permutation> mus;
  std::vector<bool> has_partner(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto mu = find_conjugator(mm1.algebra, other.algebra, aut1[i], aut2[j], nodes, true);
      if (!mu) continue;
      out.edges.emplace_back(i, j);
      mus.emplace(IndexPair{i, j}, std::move(*mu));
      has_partner[i] = true;
    }
  }
  if (std::find(has_partner.begin(), has_partner.end(), false) != has_partner.end()) {
    out.verdict = Verdict::unmatched_interpretation;
    return out;
  }

  // Step 5: alpha as a perfect matching.
  auto matching = bipartite_perfect_matching(n, out.edges);
  if (!matching) {
    out.verdict = Verdict::no_perfect_matching;
    return out;
  }

  if (!options.strict_single_mu) {
    MultiModelEquivWitness w;
    w.alpha = *matching;
    for (const auto& pair : w.alpha) w.mus.push_back(mus.at(pair));
    out.witness = std::move(w);
    out.verdict = Verdict::equivalent;
    return out;
  }

  for_each_isomorphism(mm1.algebra, other.algebra, nodes, [&](const Permutation& mu) {
    std::vector<IndexPair> shared;
    for (const auto& [i, j] : out.edges) {
      if (conjugates_onto(aut1[i], aut2[j], mu)) shared.emplace_back(i, j);
    }
    auto m = bipartite_perfect_matching(n, shared);
    if (!m) return true;
    MultiModelEquivWitness w;
    w.alpha = *m;
    w.mus.assign(n, mu);
    out.witness = std::move(w);
    return false;
  });
  out.verdict = out.witness ? Verdict::equivalent : Verdict::no_shared_conjugator;
  return out;
}

std::optional<MultiModelEquivWitness> multimodels_automorphically_equivalent(
    const MultiModel& mm1, const MultiModel& mm2, const EquivalenceOptions& options) {
  return decide_multimodel_equivalence(mm1, mm2, options).witness;
}

Recheck verify_algebra_witness(const Algebra& a, const Algebra& b, const Permutation& delta,
                               const SearchBudget& budget) {
  require_valid(a);
  require_valid(b);
  if (!same_sorts(a.domain, b.domain)) return {false, "domains differ in sort names or cardinalities"};
  const auto aligned = reorder_sorts(b, a.domain);
  if (!respects_sorts(a.domain, delta)) return {false, "delta is not a sort-wise bijection"};
  const auto aut_a = algebra_automorphisms(a, budget);
  const auto aut_b = algebra_automorphisms(aligned, budget);
  if (!groups_equal(conjugate_group(aut_a, delta, aligned.domain), aut_b)) {
    return {false, "delta does not conjugate Aut(A) onto Aut(B)"};
  }
  return {true, ""};
}

Recheck verify_model_witness(const Model& m1, const Model& m2, const ModelEquivWitness& w,
                             const SearchBudget& budget) {
  require_valid(m1);
  require_valid(m2);
  if (auto why = signature_mismatch(m1.algebra, m2.algebra)) return {false, *why};
  const auto aligned = reorder_sorts(m2, m1.domain());
  if (!respects_sorts(m1.domain(), w.mu)) return {false, "mu is not a sort-wise bijection"};
  if (!is_algebra_isomorphism(m1.algebra, aligned.algebra, w.mu)) {
    return {false, "mu is not an algebra isomorphism"};
  }
  const auto aut1 = model_automorphisms(m1, budget);
  const auto aut2 = model_automorphisms(aligned, budget);
  if (!groups_equal(conjugate_group(aut1, w.mu, aligned.domain()), aut2)) {
    return {false, "mu does not conjugate Aut(f1) onto Aut(f2)"};
  }
  return {true, ""};
}

Recheck verify_multimodel_witness(const MultiModel& mm1, const MultiModel& mm2,
                                  const MultiModelEquivWitness& w, const SearchBudget& budget) {
  const auto n = mm1.interpretations.size();
  if (n != mm2.interpretations.size()) return {false, "interpretation counts differ"};
  if (w.alpha.size() != n || w.mus.size() != n) {
    return {false, "witness must pair every interpretation exactly once"};
  }
  std::vector<bool> left(n, false), right(n, false);
  for (const auto& [i, j] : w.alpha) {
    if (i >= n || j >= n || left[i] || right[j]) return {false, "alpha is not a bijection"};
    left[i] = right[j] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto [i, j] = w.alpha[k];
    auto r = verify_model_witness(mm1.model(i), mm2.model(j), ModelEquivWitness{w.mus[k]}, budget);
    if (!r.ok) {
      r.reason = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + r.reason;
      return r;
    }
  }
  return {true, ""};
}

}  // namespace autoequiv
