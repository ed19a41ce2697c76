#pragma once

// Finite multi-sorted domains, algebras (operation tables), relation
// signatures, interpretations, models and multi-models.
//
// Elements are addressed canonically as (sort, 0-based index). Every
// domain also numbers its elements globally ("points"): the points of
// sort i occupy the half-open range [offset(i), offset(i) + size(i)).
// Permutations and search work on points; files and reports use
// (sort, index) pairs.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autoequiv {

using Point = std::uint32_t;

struct Sort {
  std::string name;
  std::size_t size = 0;

  friend bool operator==(const Sort&, const Sort&) = default;
};

class SortedDomain {
 public:
  SortedDomain() = default;
  explicit SortedDomain(std::vector<Sort> sorts);

  const std::vector<Sort>& sorts() const { return sorts_; }
  std::size_t sort_count() const { return sorts_.size(); }
  std::size_t size(std::size_t sort) const { return sorts_.at(sort).size; }
  const std::string& name(std::size_t sort) const { return sorts_.at(sort).name; }
  std::optional<std::size_t> find_sort(std::string_view name) const;

  /// Total number of elements across all sorts.
  std::size_t point_count() const { return point_count_; }
  Point offset(std::size_t sort) const { return offsets_.at(sort); }
  std::size_t sort_of(Point p) const;

  friend bool operator==(const SortedDomain& a, const SortedDomain& b) {
    return a.sorts_ == b.sorts_;
  }

 private:
  std::vector<Sort> sorts_;
  std::vector<Point> offsets_;
  std::size_t point_count_ = 0;
};

struct Element {
  std::uint32_t sort = 0;
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

using Tuple = std::vector<Element>;

Point to_point(const SortedDomain& domain, Element e);
Element to_element(const SortedDomain& domain, Point p);

struct OperationRow {
  Tuple args;
  Element result;

  friend bool operator==(const OperationRow&, const OperationRow&) = default;
};

/// A total operation: one row per point of the argument-sort product.
/// Nullary operations (constants) have a single row with no arguments.
struct OperationTable {
  std::string name;
  std::vector<std::size_t> arg_sorts;
  std::size_t result_sort = 0;
  std::vector<OperationRow> rows;

  friend bool operator==(const OperationTable&, const OperationTable&) = default;
};

struct RelationSymbol {
  std::string name;
  std::vector<std::size_t> signature;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// One state f: relation name -> tuple set. Tuples are kept as a list so
/// that decoded duplicates remain visible to validation.
struct Interpretation {
  std::string label;
  std::map<std::string, std::vector<Tuple>> tuples;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

struct Algebra {
  SortedDomain domain;
  std::vector<OperationTable> operations;

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

struct Model {
  Algebra algebra;
  std::vector<RelationSymbol> relations;
  Interpretation interpretation;

  const SortedDomain& domain() const { return algebra.domain; }

  friend bool operator==(const Model&, const Model&) = default;
};

/// (D, Phi, F) with F an ordered list of uniquely labelled interpretations.
struct MultiModel {
  Algebra algebra;
  std::vector<RelationSymbol> relations;
  std::vector<Interpretation> interpretations;

  const SortedDomain& domain() const { return algebra.domain; }
  Model model(std::size_t i) const;
  static MultiModel from_model(const Model& m);

  friend bool operator==(const MultiModel&, const MultiModel&) = default;
};

struct Violation {
  std::string path;
  std::string message;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Sorted list of violations; empty means valid.
using ValidationReport = std::vector<Violation>;

ValidationReport validate(const SortedDomain& domain);
ValidationReport validate(const Algebra& algebra);
ValidationReport validate(const Model& model);
ValidationReport validate(const MultiModel& mm);

/// Throws ValidationError when the report is non-empty.
void require_valid(const Algebra& algebra);
void require_valid(const Model& model);
void require_valid(const MultiModel& mm);

/// Product of the cardinalities of the relation's signature sorts.
/// Throws SignatureError on an unknown sort and ResourceError on overflow.
std::uint64_t tuple_space_size(const RelationSymbol& relation, const SortedDomain& domain);

/// Renders a tuple as "(V:0,V:1)"; used in violation paths and labels.
std::string format_tuple(const SortedDomain& domain, const Tuple& t);

/// True when both domains have the same sort names with the same sizes,
/// regardless of sort order.
bool same_sorts(const SortedDomain& a, const SortedDomain& b);

/// Re-indexes sorts so that the domain lists them in `reference` order.
/// Throws DomainMismatch unless same_sorts(m.domain(), reference).
Algebra reorder_sorts(const Algebra& a, const SortedDomain& reference);
Model reorder_sorts(const Model& m, const SortedDomain& reference);
MultiModel reorder_sorts(const MultiModel& mm, const SortedDomain& reference);

/// Returns the same multi-model with every tuple list sorted.
MultiModel canonicalized(MultiModel mm);

}  // namespace autoequiv
