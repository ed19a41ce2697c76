#include "autoequiv/constructions.hpp"

#include <algorithm>
#include <set>

#include "autoequiv/errors.hpp"
#include "autoequiv/search.hpp"

namespace autoequiv {
namespace {

constexpr std::uint64_t kMaxComplementTuples = std::uint64_t{1} << 24;
constexpr std::string_view kComplementSuffix = "-complement";

// Every tuple of the relation's Cartesian product not in `present`, in
// lexicographic order.
std::vector<Tuple> cartesian_complement(const RelationSymbol& r, const SortedDomain& domain,
                                        const std::vector<Tuple>& present, bool skip_diagonal) {
  if (tuple_space_size(r, domain) > kMaxComplementTuples) {
    throw ResourceError("tuple space of relation '" + r.name + "' is too large to complement");
  }
  const std::set<Tuple> have(present.begin(), present.end());
  std::vector<Tuple> out;
  Tuple t;
  for (auto s : r.signature) t.push_back(Element{static_cast<std::uint32_t>(s), 0});
  while (true) {
    const bool diagonal =
        std::all_of(t.begin(), t.end(), [&](const Element& e) { return e == t.front(); });
    if (!have.contains(t) && !(skip_diagonal && diagonal)) out.push_back(t);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i].index < domain.size(t[i].sort)) break;
      t[i].index = 0;
      if (i == 0) return out;
    }
  }
}

MultiModel complement_impl(const MultiModel& mm, bool skip_diagonal) {
  require_valid(mm);
  MultiModel out = mm;
  for (auto& f : out.interpretations) {
    f.label = complement_label(f.label);
    for (const auto& r : mm.relations) {
      f.tuples[r.name] = cartesian_complement(r, mm.domain(), f.tuples.at(r.name), skip_diagonal);
    }
  }
  return out;
}

}  // namespace

std::string complement_label(const std::string& label) {
  if (label.size() >= kComplementSuffix.size() &&
      label.compare(label.size() - kComplementSuffix.size(), kComplementSuffix.size(),
                    kComplementSuffix) == 0) {
    return label.substr(0, label.size() - kComplementSuffix.size());
  }
  return label + std::string(kComplementSuffix);
}

MultiModel sigma_transform(const MultiModel& mm, const Permutation& sigma) {
  require_valid(mm);
  const auto& domain = mm.domain();
  if (!respects_sorts(domain, sigma)) {
    throw PreconditionError("sigma is not a sort-wise bijection of the domain");
  }
  if (!is_algebra_automorphism(mm.algebra, sigma)) {
    throw PreconditionError("sigma is not an automorphism of the algebra");
  }
  MultiModel out = mm;
  const auto suffix = sigma.is_identity() ? std::string() : "^" + format_cycles(domain, sigma);
  for (auto& f : out.interpretations) {
    f.label += suffix;
    for (auto& [_, tuples] : f.tuples) {
      for (auto& t : tuples) {
        for (auto& e : t) e = sigma(domain, e);
      }
      std::sort(tuples.begin(), tuples.end());
    }
  }
  return out;
}

MultiModel complement(const MultiModel& mm) { return complement_impl(mm, false); }

MultiModel simple_graph_complement(const MultiModel& mm) {
  if (mm.relations.size() != 1) {
    throw ShapeError("simple graph complement needs exactly one relation, found " +
                     std::to_string(mm.relations.size()));
  }
  const auto& sig = mm.relations.front().signature;
  if (sig.size() != 2 || sig[0] != sig[1]) {
    throw ShapeError("simple graph complement needs a binary relation over a single sort");
  }
  return complement_impl(mm, true);
}

}  // namespace autoequiv
