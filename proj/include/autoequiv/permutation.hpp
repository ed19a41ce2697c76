#pragma once

// Multi-sorted permutations and fully materialized permutation groups.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autoequiv/model.hpp"

namespace autoequiv {

/// A sort-respecting bijection, stored as one flat image array over the
/// domain's global point numbering. The same representation serves
/// automorphisms (A -> A) and cross-domain bijections (A -> B) once B's
/// sorts are listed in A's order (see reorder_sorts).
///
/// Ordering is lexicographic on the image array, which equals
/// lexicographic order on the concatenated per-sort image arrays.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> image) : image_(std::move(image)) {}

  static Permutation identity(std::size_t points);
  static Permutation identity(const SortedDomain& domain) {
    return identity(domain.point_count());
  }

  /// Builds a permutation from per-sort image arrays (0-based, local to
  /// each sort). Throws DomainMismatch or PreconditionError when the arrays
  /// do not describe a sort-wise bijection of `domain`.
  static Permutation from_sorts(const SortedDomain& domain,
                                const std::vector<std::vector<Point>>& per_sort);

  Point operator()(Point p) const { return image_[p]; }
  Element operator()(const SortedDomain& domain, Element e) const;

  std::span<const Point> image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  bool is_identity() const;

  /// Per-sort local image arrays.
  std::vector<std::vector<Point>> per_sort(const SortedDomain& domain) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// p∘q: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
/// mu g mu^-1.
Permutation conjugate(const Permutation& g, const Permutation& mu);

/// Cycle notation per sort, e.g. "V:(0 3)(1 2) W:(0 1)"; sorts on which
/// p acts trivially are omitted and the identity is "id".
std::string format_cycles(const SortedDomain& domain, const Permutation& p);

/// Parses format_cycles output. A bare "(0 1)" is accepted for one-sort
/// domains. Throws ParseError on malformed text or a non-bijection.
Permutation parse_cycles(const SortedDomain& domain, std::string_view text);

/// True when p is a bijection of the domain's points mapping each sort
/// onto itself.
bool respects_sorts(const SortedDomain& domain, const Permutation& p);

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

class PermGroup {
 public:
  const SortedDomain& domain() const { return domain_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// All elements in canonical (lexicographic) order; the first is the identity.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

  /// Wraps an already-closed element set and derives a small generating
  /// set greedily in canonical order. Throws PreconditionError if the set
  /// is not closed under composition.
  static PermGroup from_elements(SortedDomain domain, std::vector<Permutation> elements);

 private:
  friend PermGroup closure(const SortedDomain&, std::vector<Permutation>, std::size_t);
  friend PermGroup conjugate_group(const PermGroup&, const Permutation&, const SortedDomain&);

  PermGroup(SortedDomain domain, std::vector<Permutation> generators,
            std::vector<Permutation> elements)
      : domain_(std::move(domain)),
        generators_(std::move(generators)),
        elements_(std::move(elements)) {}

  SortedDomain domain_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// The smallest group containing `generators`. Throws ResourceError when
/// the group would exceed `cap` elements.
PermGroup closure(const SortedDomain& domain, std::vector<Permutation> generators,
                  std::size_t cap = kDefaultGroupCap);

/// { mu g mu^-1 : g in G } as a group over `target`.
PermGroup conjugate_group(const PermGroup& group, const Permutation& mu,
                          const SortedDomain& target);
inline PermGroup conjugate_group(const PermGroup& group, const Permutation& mu) {
  return conjugate_group(group, mu, group.domain());
}

/// Element-set equality, decided by order plus generator membership both ways.
bool groups_equal(const PermGroup& g, const PermGroup& h);

struct OrbitPartition {
  /// orbit_of[p] is the smallest point in p's orbit.
  std::vector<Point> orbit_of;
  std::vector<std::size_t> orbit_size;
};

OrbitPartition orbits(const PermGroup& group);

/// Per sort, the sorted multiset of orbit sizes. A conjugation invariant.
std::vector<std::vector<std::size_t>> orbit_profile(const PermGroup& group);

}  // namespace autoequiv
