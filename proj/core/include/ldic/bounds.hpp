#pragma once

// Min-rank, closed-form trade-offs and the converse inequalities checked on concrete codes.
// All arithmetic is exact.

#include "ldic/graph.hpp"
#include "ldic/index_code.hpp"
#include "ldic/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldic {

inline constexpr std::uint64_t kDefaultMinrankBudget = std::uint64_t{1} << 24;

struct MinrankResult {
  int value = 0;
  FittingMatrix witness;
};

/// Exact minrk_q(g) by branch-and-bound over all fitting matrices. A branch is dropped once
/// the columns fixed so far already reach the best rank found; the search stops when the
/// best rank meets the maximum-acyclic-induced-subgraph lower bound.
/// Throws BudgetExceeded if q^(number of edges) > budget.
MinrankResult minrank_bruteforce(const SideInformationGraph& g, const PrimeField& field,
                                 std::uint64_t budget = kDefaultMinrankBudget);

/// Size of a largest vertex set inducing an acyclic subgraph (a lower bound on min-rank).
int max_acyclic_induced_subgraph(const SideInformationGraph& g);

/// beta*(r) = max{N-1, N(N-1-r)/(N-2)} for the directed N-cycle.
/// Throws PreconditionError for N < 3 or r < 1.
Rational cycle_tradeoff(int N, const Rational& r);

/// Smallest M that can reach locality 2(N-1)/N on the N-cycle: N if N is odd, N/2 if even.
int min_message_length(int N);

/// Optimal locality at rate N-1 on the N-cycle for message length M, or nullopt where
/// no optimum is established (N odd with M > N not a multiple of N, N even with M not a
/// multiple of N/2 above N/2).
std::optional<Rational> optimal_cycle_locality_for_M(int N, int M);

struct ScalarDeficitBounds {
  Rational r;
  Rational r_avg;
};

/// r = 2 and r_avg = (N + N_c - 2) / N for rate N-1 scalar codes when minrk_q(g) = N-1 and N_c >= 3.
/// Throws PreconditionError naming the failed condition.
ScalarDeficitBounds scalar_bounds_minrank_deficit(const SideInformationGraph& g, const PrimeField& field,
                                                  std::uint64_t budget = kDefaultMinrankBudget);

enum class CheckStatus { Holds, Violated, NotApplicable };

struct CheckResult {
  std::string name;     // "lemma1", "lemma2", "lemma3", "corollary1", "lemma5", "lemma6"
  CheckStatus status = CheckStatus::NotApplicable;
  Rational lhs;
  Rational rhs;
  Rational slack;       // lhs - rhs; nonnegative when the inequality holds
  IndexSet subset;      // null-vector support S for the per-subset checks
  std::string note;
};

struct ConverseReport {
  std::vector<CheckResult> checks;

  bool all_hold() const;
  /// First applicable check with the given name and (optionally) subset.
  const CheckResult* find(const std::string& name) const;
};

struct ConverseOptions {
  std::uint64_t minrank_budget = kDefaultMinrankBudget;
  std::uint64_t null_vector_limit = 4096; // enumerate N(A) fully up to this many vectors
  std::uint64_t sample_seed = 1;
};

/// Evaluates the structural inequalities on a decodable code and its plan:
///   lemma1      |S| >= M (2 beta - N r_avg)                 (every column queried)
///   lemma2      sum_{i in S} |R_i| >= 2 |U_{i in S} R_i|     (scalar; independent columns, all alpha nonzero)
///   lemma3      |U_{i in S} R_i| >= minrk(G_S)               (scalar)
///   corollary1  sum_{i in S} r_i >= 2 minrk(G_S)             (scalar; ell == minrk(g))
///   lemma5      G_S contains a directed cycle                 (scalar)
///   lemma6      minrk(G_S) >= |S| - 1                         (scalar; minrk(g) == N-1)
/// where S ranges over supports of nonzero null vectors of the plan's fitting matrix.
/// Inapplicable checks are reported as NotApplicable, never as failures.
ConverseReport converse_checks(const SideInformationGraph& g, const IndexCode& code, const DecodingPlan& plan,
                               const ConverseOptions& options = {});

std::string to_string(CheckStatus status);

} // namespace ldic
