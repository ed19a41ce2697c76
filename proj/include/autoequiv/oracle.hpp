#pragma once

// Brute-force reference decisions for small inputs.
//
// Everything here enumerates all sort-wise bijections and checks the
// definitions directly with map/set lookups. It shares no code with the
// backtracking search or the equivalence engine, only the model types and
// permutation composition, so the two can be tested against each other.

#include <cstdint>
#include <optional>
#include <vector>

#include "autoequiv/equivalence.hpp"
#include "autoequiv/model.hpp"
#include "autoequiv/permutation.hpp"

namespace autoequiv {

inline constexpr std::size_t kOracleMaxSortSize = 6;
inline constexpr std::uint64_t kOracleMaxBijections = 1'000'000;
inline constexpr std::size_t kOracleMaxInterpretations = 5;

/// Aut(f) within Aut(A), sorted. ResourceError beyond the oracle caps.
std::vector<Permutation> oracle_model_automorphisms(const Model& model);
std::vector<Permutation> oracle_algebra_automorphisms(const Algebra& algebra);

/// Least sort-wise bijection delta with Aut(B) = delta Aut(A) delta^-1.
std::optional<Permutation> oracle_algebra_equiv(const Algebra& a, const Algebra& b);

/// Least algebra isomorphism mu with Aut(f2) = mu Aut(f1) mu^-1.
std::optional<Permutation> oracle_model_equiv(const Model& m1, const Model& m2);

/// First alpha (lexicographic) whose every pair is model-equivalent.
std::optional<MultiModelEquivWitness> oracle_multimodel_equiv(const MultiModel& mm1,
                                                              const MultiModel& mm2);

}  // namespace autoequiv
