#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stolarsky/means.hpp"

namespace stolarsky {

/// Solution-family catalogues: the invariance-equation families for Stolarsky
/// (S) and Gini (G) means, and the two Matkowski-Suto specializations (outer
/// mean arithmetic: CorS for Stolarsky pairs, CorG for Gini pairs).
enum class Theorem { S, G, CorS, CorG };

Theorem parse_theorem(std::string_view name);  // "S" "G" "CorS" "CorG"
std::string theorem_name(Theorem t);

/// Case descriptor: identifier, free-parameter arity, human-readable shape.
struct FamilyCase {
  std::string id;
  int arity;
  std::string shape;
};
const std::vector<FamilyCase>& family_cases(Theorem t);

/// Produces a six-tuple lying exactly in the requested family. Throws
/// unknown_case for a bad case id, bad_input for wrong arity or parameters
/// violating the family's own constraints (e.g. {a,b} != {c,d} where the case
/// demands equality).
SixTuple family_tuple(Theorem t, std::string_view case_id, std::span<const double> params);

/// Mean family of the tuple's outer/inner means for the given theorem.
MeanFamily theorem_mean_family(Theorem t);

struct ResidualSweep {
  double max_rel_residual = 0;
  double worst_x = 0, worst_y = 0;
  int samples = 0;
};

/// Max relative invariance residual of the tuple over `samples` log-uniform
/// points of [1e-2, 1e2]^2, sharded into deterministic substreams.
ResidualSweep sweep_invariance(MeanFamily family, const SixTuple& t, int samples,
                               std::uint64_t seed);

}  // namespace stolarsky
