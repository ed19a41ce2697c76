#pragma once

// Automorphic equivalence of algebras, models and multi-models.
//
// Algebras (A, f1), (B, f2) are equivalent when some sort-wise bijection
// delta conjugates Aut(A) onto Aut(B). Models additionally require the
// conjugator to be an algebra isomorphism mu: A -> B. Multi-models are
// equivalent when a bijection alpha between their interpretation lists
// pairs up equivalent models; each pair may use its own mu.
//
// All witnesses are expressed over the first argument's sort order. When
// the second argument lists its sorts differently it is re-indexed first.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autoequiv/model.hpp"
#include "autoequiv/permutation.hpp"
#include "autoequiv/search.hpp"

namespace autoequiv {

using IndexPair = std::pair<std::size_t, std::size_t>;

struct ModelEquivWitness {
  Permutation mu;

  friend bool operator==(const ModelEquivWitness&, const ModelEquivWitness&) = default;
};

struct MultiModelEquivWitness {
  /// (i, alpha(i)) for i = 0..|F1|-1, in increasing i.
  std::vector<IndexPair> alpha;
  /// mus[i] conjugates Aut(f_i) onto Aut(g_alpha(i)).
  std::vector<Permutation> mus;

  friend bool operator==(const MultiModelEquivWitness&, const MultiModelEquivWitness&) = default;
};

enum class Verdict {
  equivalent,
  algebras_not_isomorphic,
  interpretation_counts_differ,
  /// Some f_i has no model-equivalent partner at all.
  unmatched_interpretation,
  /// Every f_i has a partner but no perfect matching exists.
  no_perfect_matching,
  /// Strict mode: no single mu serves every matched pair.
  no_shared_conjugator,
};

std::string describe(Verdict v);

struct MultiModelDecision {
  Verdict verdict = Verdict::equivalent;
  std::optional<MultiModelEquivWitness> witness;
  /// Edges (i, j) of the bipartite graph of model-equivalent pairs. Empty
  /// when the decision stopped before building it.
  std::vector<IndexPair> edges;
  std::optional<std::string> note;
};

struct EquivalenceOptions {
  SearchBudget budget;
  /// Require one mu shared by all matched pairs.
  bool strict_single_mu = false;
};

/// Canonically least delta with Aut(B) = delta Aut(A) delta^-1, or nullopt.
/// Operation signatures of A and B may differ.
std::optional<Permutation> algebras_automorphically_equivalent(const Algebra& a, const Algebra& b,
                                                               const SearchBudget& budget = {});

/// Canonically least mu in Iso(A, B) with Aut(f2) = mu Aut(f1) mu^-1.
std::optional<ModelEquivWitness> models_automorphically_equivalent(
    const Model& m1, const Model& m2, const SearchBudget& budget = {});

/// The full decision procedure with the reason for a negative verdict.
MultiModelDecision decide_multimodel_equivalence(const MultiModel& mm1, const MultiModel& mm2,
                                                 const EquivalenceOptions& options = {});

std::optional<MultiModelEquivWitness> multimodels_automorphically_equivalent(
    const MultiModel& mm1, const MultiModel& mm2, const EquivalenceOptions& options = {});

/// Perfect matching of an n x n bipartite graph by augmenting paths, trying
/// left vertices and their neighbours in increasing index order.
std::optional<std::vector<IndexPair>> bipartite_perfect_matching(std::size_t n,
                                                                 std::span<const IndexPair> edges);

/// Conjugator search between two already computed groups. `b` must list its
/// sorts in `a`'s order. Returns the least mu in Iso(a, b) (or, when
/// `require_isomorphism` is false, the least sort-wise bijection) with
/// mu G mu^-1 = H.
std::optional<Permutation> find_conjugator(const Algebra& a, const Algebra& b, const PermGroup& g,
                                           const PermGroup& h, NodeBudget& nodes,
                                           bool require_isomorphism = true);

// Witness rechecks. Each recomputes the automorphism groups and tests the
// conjugation equality with permgroup primitives only.

struct Recheck {
  bool ok = false;
  std::string reason;
};

Recheck verify_algebra_witness(const Algebra& a, const Algebra& b, const Permutation& delta,
                               const SearchBudget& budget = {});
Recheck verify_model_witness(const Model& m1, const Model& m2, const ModelEquivWitness& w,
                             const SearchBudget& budget = {});
Recheck verify_multimodel_witness(const MultiModel& mm1, const MultiModel& mm2,
                                  const MultiModelEquivWitness& w, const SearchBudget& budget = {});

}  // namespace autoequiv
