#pragma once

// Achievability schemes: uncoded transmission, the rotated scalar cycle code,
// time sharing, the cycle vector codes, and the min-rank-deficit-one scheme.

#include "ldic/graph.hpp"
#include "ldic/index_code.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ldic {

/// L = I_{MN}, R_i = D_i.
IndexCode uncoded(const SideInformationGraph& g, int M, const PrimeField& field);

/// Scalar code of length N-1 for the directed N-cycle. Anchor 1 is the code
/// c = (x_1+x_2, x_1+x_3, ..., x_1+x_N) with R_1 = {1}, R_N = {N-1}, R_i = {i-1, i};
/// anchor a is its cyclic relabeling by a-1, giving unit locality at receivers a-1 and a
/// (receiver 0 read as N). Throws PreconditionError for N < 3 or anchor outside [1..N].
IndexCode cycle_scalar_code(int N, const PrimeField& field, int anchor);

/// Locality tuples are numbered so that tuple t has r_t = r_{t+1} = 1 (t+1 read cyclically).
/// Returns the anchor of cycle_scalar_code realizing tuple t.
int anchor_for_tuple(int N, int tuple);

/// Block-diagonal time sharing. Message components are laid out as in expand_indices,
/// block t owning components [offset_t + 1, offset_t + M_t] of every message.
/// Throws StructuralError on mismatched q or N.
IndexCode time_share(std::span<const IndexCode> codes);

struct RotationSchedule {
  int N = 0;
  std::vector<int> tuples; // locality-tuple index per time slot; size == M
};

struct CycleVectorCode {
  IndexCode code;
  RotationSchedule schedule;
  bool heuristic = false; // M outside the regimes with a proven optimal schedule
};

/// Schedule used by cycle_vector_code for message length M.
RotationSchedule cycle_schedule(int N, int M, bool* heuristic = nullptr);

/// Rate N-1 vector code for the directed N-cycle built by time sharing rotated scalar codes.
CycleVectorCode cycle_vector_code(int N, const PrimeField& field, int M);

/// Scalar code of length N-1 for a graph containing a directed cycle. A shortest 2-cycle {i, j}
/// becomes one symbol x_i + x_j; otherwise the cycle code runs on a shortest cycle C.
/// All other messages are sent uncoded. Throws PreconditionError for a DAG.
IndexCode minrank_deficit_code(const SideInformationGraph& g, const PrimeField& field);

} // namespace ldic
