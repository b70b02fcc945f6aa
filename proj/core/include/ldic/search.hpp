#pragma once

// Exhaustive search over small linear index codes: ground truth for optimality claims
// at desk scale. Every encoder with nonzero columns is considered up to column scaling
// (first nonzero entry 1) and column order; each receiver gets a smallest decoding
// query set, found by subset enumeration in increasing size.

#include "ldic/graph.hpp"
#include "ldic/index_code.hpp"
#include "ldic/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ldic {

struct ParetoPoint {
  Rational beta;
  Rational r;
  Rational r_avg;
  IndexCode witness;
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 22;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget; // max encoders enumerated after symmetry reduction
  unsigned threads = 0;                         // 0: std::thread::hardware_concurrency()
};

/// Number of encoders the search enumerates: multisets of size ell drawn from the
/// (q^{MN} - 1) / (q - 1) normalized nonzero columns. Saturates at UINT64_MAX.
std::uint64_t search_candidate_count(int N, std::uint32_t q, int M, int ell);

/// Pareto frontier over (beta, r, r_avg) of all decodable scalar codes of length ell with
/// r <= locality_cap (no cap when nullopt). Sorted by (beta, r, r_avg). Throws BudgetExceeded.
std::vector<ParetoPoint> exhaustive_scalar_search(const SideInformationGraph& g, const PrimeField& field, int ell,
                                                  std::optional<Rational> locality_cap = std::nullopt,
                                                  const SearchOptions& options = {});

/// Same contract for message length M (MN-row encoders, demands D_i, side information K_i).
std::vector<ParetoPoint> exhaustive_vector_search(const SideInformationGraph& g, const PrimeField& field, int M,
                                                  int ell, std::optional<Rational> locality_cap = std::nullopt,
                                                  const SearchOptions& options = {});

/// Non-dominated points of the union (minimizing all three coordinates). Among equal
/// profiles the first occurrence is kept. Sorted by (beta, r, r_avg).
std::vector<ParetoPoint> pareto_frontier(std::vector<ParetoPoint> points);

} // namespace ldic
