#include "tables.hpp"

#include "autoequiv/errors.hpp"

namespace autoequiv::detail {

Radix::Radix(const std::vector<std::size_t>& sorts, const SortedDomain& domain) {
  offsets.resize(sorts.size());
  strides.resize(sorts.size());
  for (std::size_t i = sorts.size(); i-- > 0;) {
    offsets[i] = domain.offset(sorts[i]);
    strides[i] = space;
    space *= domain.size(sorts[i]);
  }
}

std::vector<Point> to_points(const SortedDomain& domain, const Tuple& t) {
  std::vector<Point> out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back(to_point(domain, e));
  return out;
}

DenseOperation::DenseOperation(const OperationTable& op, const SortedDomain& domain)
    : radix_(op.arg_sorts, domain), results_(radix_.space, 0) {
  for (const auto& row : op.rows) {
    results_[radix_.encode(to_points(domain, row.args))] = to_point(domain, row.result);
  }
}

TupleMembership::TupleMembership(const RelationSymbol& relation, const SortedDomain& domain,
                                 const std::vector<Tuple>& tuples)
    : radix_(relation.signature, domain) {
  dense_ = tuple_space_size(relation, domain) <= kDenseLimit;
  if (dense_) bits_.assign(radix_.space, false);
  for (const auto& t : tuples) {
    const auto code = radix_.encode(to_points(domain, t));
    if (dense_) {
      bits_[code] = true;
    } else {
      codes_.insert(code);
    }
  }
}

std::vector<std::size_t> match_operations(const Algebra& a, const Algebra& b) {
  std::vector<std::size_t> out;
  out.reserve(a.operations.size());
  for (const auto& op : a.operations) {
    std::size_t j = 0;
    while (j < b.operations.size() && b.operations[j].name != op.name) ++j;
    if (j == b.operations.size()) throw PreconditionError("operation '" + op.name + "' missing");
    out.push_back(j);
  }
  return out;
}

}  // namespace autoequiv::detail
