#pragma once

#include <stdexcept>
#include <vector>

#include "caysig/sigraph.hpp"

namespace caysig {

/// Refusal to run an exponential search above its size gate. Gates are hard
/// errors, never silent truncation.
struct gate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCycleLimit = 12;
inline constexpr int kDefaultMarkingLimit = 16;

/// Every simple cycle of g exactly once, in canonical form: the first vertex
/// is the cycle's smallest, and the direction is chosen so the second vertex
/// is smaller than the last. Deterministic order. Throws gate_error when g
/// has more than max_vertices vertices.
std::vector<SignedCycle> enumerate_simple_cycles(const Sigraph& g,
                                                 int max_vertices = kDefaultCycleLimit);

/// True iff every simple cycle has an even number of negative edges.
bool balance_by_cycles(const Sigraph& g, int max_vertices = kDefaultCycleLimit);

/// True iff no simple cycle has exactly one negative edge.
bool clusterability_by_cycles(const Sigraph& g, int max_vertices = kDefaultCycleLimit);

/// Tries all 2^V markings: true iff some marking puts - on both ends of every
/// negative edge and on at most one end of every positive edge.
bool sign_compat_exhaustive(const Sigraph& g, int max_vertices = kDefaultMarkingLimit);

/// Lengths of the maximal circular runs of negative edges of a heterogeneous
/// cycle, in scan order starting after its first positive edge. Throws
/// std::invalid_argument on homogeneous cycles.
std::vector<int> negative_sections(const SignedCycle& c);

}  // namespace caysig
