#pragma once

// Backtracking search for Aut(A), Aut(f) and Iso(A, B).
//
// Points are assigned in increasing global order and candidate images are
// tried in increasing order, so every enumeration is produced in canonical
// (lexicographic) permutation order. A branch is pruned as soon as a fully
// mapped operation row or relation tuple is violated; per-point degree
// profiles restrict candidates but never decide correctness on their own.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autoequiv/errors.hpp"
#include "autoequiv/model.hpp"
#include "autoequiv/permutation.hpp"

namespace autoequiv {

inline constexpr std::uint64_t kDefaultMaxNodes = 10'000'000;

struct SearchBudget {
  /// Cap on backtracking nodes (assignments tried) per top-level call.
  std::uint64_t max_nodes = kDefaultMaxNodes;
  /// Stop an enumeration of isomorphisms after this many results.
  std::optional<std::size_t> max_results;
  /// Cap on materialized group size.
  std::size_t group_cap = kDefaultGroupCap;
};

/// Counts nodes against a budget shared by every search in one decision.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t max_nodes) : max_(max_nodes) {}

  void spend() {
    if (++used_ > max_) {
      throw ResourceError("search budget of " + std::to_string(max_) +
                              " nodes exhausted after visiting " + std::to_string(used_ - 1) +
                              " nodes",
                          used_ - 1);
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t max() const { return max_; }

 private:
  std::uint64_t max_;
  std::uint64_t used_ = 0;
};

/// Which bijections count as automorphisms of a model.
enum class AutReading {
  /// Aut(f) = { s in Aut(A) : s preserves every f(phi) }. Drives all decisions.
  within_algebra,
  /// Every sort-wise bijection preserving every f(phi); operations ignored.
  relations_only,
};

PermGroup algebra_automorphisms(const Algebra& algebra, const SearchBudget& budget = {});
PermGroup algebra_automorphisms(const Algebra& algebra, NodeBudget& nodes,
                                std::size_t group_cap = kDefaultGroupCap);

PermGroup model_automorphisms(const Model& model, const SearchBudget& budget = {},
                              AutReading reading = AutReading::within_algebra);
PermGroup model_automorphisms(const Model& model, NodeBudget& nodes,
                              std::size_t group_cap = kDefaultGroupCap,
                              AutReading reading = AutReading::within_algebra);

/// Why two algebras cannot be isomorphic on signature grounds alone, or
/// nullopt when domains and operation signatures match by name.
std::optional<std::string> signature_mismatch(const Algebra& a, const Algebra& b);

struct IsomorphismList {
  /// Bijections A -> B in canonical order. Target points are numbered in
  /// A's sort order (B's sorts are re-indexed to A's order first).
  std::vector<Permutation> isomorphisms;
  /// Set when the signatures differ and the list is empty for that reason.
  std::optional<std::string> note;
  /// True when max_results stopped the enumeration early.
  bool truncated = false;
};

IsomorphismList algebra_isomorphisms(const Algebra& a, const Algebra& b,
                                     const SearchBudget& budget = {});

/// Receives each result; return false to stop the enumeration.
using PermutationVisitor = std::function<bool(const Permutation&)>;

/// Extra pruning hook: may `source` map to `target` given the images
/// already fixed for points 0..source-1? Must only reject branches that
/// contain no wanted result.
using PairFilter = std::function<bool(Point source, Point target, std::span<const Point> assigned)>;

/// Lazily enumerates Iso(A, B) in canonical order. Requires matching
/// signatures and B's sorts already in A's order.
void for_each_isomorphism(const Algebra& a, const Algebra& b, NodeBudget& nodes,
                          const PermutationVisitor& visit, const PairFilter& filter = {});

/// Lazily enumerates every sort-wise bijection of `domain` in canonical order.
void for_each_bijection(const SortedDomain& domain, NodeBudget& nodes,
                        const PermutationVisitor& visit, const PairFilter& filter = {});

/// Direct table check: mu(op_A(x...)) == op_B(mu x...) for every row.
/// B's sorts must be in A's order.
bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Permutation& mu);
bool is_algebra_automorphism(const Algebra& algebra, const Permutation& sigma);

}  // namespace autoequiv
