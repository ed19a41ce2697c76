#pragma once

// Building multi-models automorphically equivalent to a given one.

#include <string>

#include "autoequiv/model.hpp"
#include "autoequiv/permutation.hpp"

namespace autoequiv {

/// Pushes every interpretation forward along an algebra automorphism:
/// t is in f^sigma(phi) iff sigma^-1(t) is in f(phi). Labels gain a
/// "^<sigma in cycle notation>" suffix unless sigma is the identity.
/// Throws PreconditionError when sigma is not in Aut(A).
MultiModel sigma_transform(const MultiModel& mm, const Permutation& sigma);

/// Replaces each f(phi) by its complement in the full Cartesian product of
/// the signature sorts (diagonal tuples included).
MultiModel complement(const MultiModel& mm);

/// Loop-free complement for graph-shaped multi-models: exactly one binary
/// relation whose two positions share a sort. Throws ShapeError otherwise.
MultiModel simple_graph_complement(const MultiModel& mm);

/// Label transformation used by both complements; applying it twice
/// restores the original label.
std::string complement_label(const std::string& label);

}  // namespace autoequiv
