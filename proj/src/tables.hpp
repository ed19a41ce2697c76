#pragma once

// Dense encodings of operation tables and tuple sets over global points.
// Tuples are coded in mixed radix over their signature sorts, first
// position most significant.

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "autoequiv/model.hpp"

namespace autoequiv::detail {

struct Radix {
  std::vector<Point> offsets;
  std::vector<std::uint64_t> strides;
  std::uint64_t space = 1;

  Radix() = default;
  Radix(const std::vector<std::size_t>& sorts, const SortedDomain& domain);

  template <typename Points>
  std::uint64_t encode(const Points& points) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      code += static_cast<std::uint64_t>(points[i] - offsets[i]) * strides[i];
    }
    return code;
  }
};

/// Operation table as a flat array: argument code -> global result point.
class DenseOperation {
 public:
  DenseOperation(const OperationTable& op, const SortedDomain& domain);

  template <typename Points>
  Point apply(const Points& args) const {
    return results_[radix_.encode(args)];
  }

 private:
  Radix radix_;
  std::vector<Point> results_;
};

/// Membership test for one relation's tuple set.
class TupleMembership {
 public:
  TupleMembership(const RelationSymbol& relation, const SortedDomain& domain,
                  const std::vector<Tuple>& tuples);

  template <typename Points>
  bool contains(const Points& points) const {
    const auto code = radix_.encode(points);
    return dense_ ? bits_[code] : codes_.contains(code);
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

  Radix radix_;
  bool dense_ = true;
  std::vector<bool> bits_;
  std::unordered_set<std::uint64_t> codes_;
};

std::vector<Point> to_points(const SortedDomain& domain, const Tuple& t);

/// Index of b's operation with the same name as each of a's operations.
/// Assumes signature_mismatch(a, b) is empty.
std::vector<std::size_t> match_operations(const Algebra& a, const Algebra& b);

}  // namespace autoequiv::detail
