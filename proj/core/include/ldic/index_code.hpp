#pragma once

// Locally decodable linear index codes: the encoder L (MN x ell, columns L_1..L_ell)
// and the query sets R_i. Column and symbol indices exposed here are 1-based.

#include "ldic/fq_linalg.hpp"
#include "ldic/graph.hpp"
#include "ldic/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ldic {

using IndexSet = std::vector<int>; // sorted, 1-based

class IndexCode {
public:
  /// Throws StructuralError unless L has M*N rows, queries has N entries and
  /// every query index is in [1..ell].
  IndexCode(int M, int N, FqMatrix encoder, std::vector<IndexSet> queries);

  const PrimeField& field() const noexcept { return encoder_.field(); }
  std::uint32_t q() const noexcept { return encoder_.field().q(); }
  int message_length() const noexcept { return M_; }
  int receivers() const noexcept { return N_; }
  int length() const noexcept { return static_cast<int>(encoder_.cols()); }
  const FqMatrix& encoder() const noexcept { return encoder_; }
  const IndexSet& queries(int receiver) const { return queries_.at(static_cast<std::size_t>(receiver - 1)); }
  const std::vector<IndexSet>& all_queries() const noexcept { return queries_; }

  /// Column L_k, k in [1..ell].
  FqVector column(int k) const { return encoder_.column(static_cast<std::size_t>(k - 1)); }

  friend bool operator==(const IndexCode&, const IndexCode&) = default;

private:
  int M_;
  int N_;
  FqMatrix encoder_;
  std::vector<IndexSet> queries_;
};

/// Witness for one demanded symbol j of receiver i:
///   sum_k alpha[k] * L_{R_i[k]} == u + e_j,  supp(u) inside calligraphic K_i.
struct SymbolWitness {
  int symbol = 0;   // j in D_i
  FqVector u;       // length MN
  FqVector alpha;   // aligned with queries(i)
};

struct DecodingPlan {
  std::vector<std::vector<SymbolWitness>> receivers; // receivers[i-1][m-1] for the m-th demand of Rx_i
  std::vector<IndexSet> side_info;                   // calligraphic K_i the witnesses were built against

  const SymbolWitness& witness(int receiver, int m) const {
    return receivers.at(static_cast<std::size_t>(receiver - 1)).at(static_cast<std::size_t>(m - 1));
  }
};

struct VerifyResult {
  std::optional<DecodingPlan> plan;
  std::vector<std::pair<int, int>> failures; // (receiver, symbol) pairs that cannot be decoded

  bool decodable() const noexcept { return plan.has_value(); }
};

/// Decodability check. Solves [L_{R_i} | E_{K_i}] y = e_j for every demanded symbol and
/// reads alpha and -u off y. Throws StructuralError if code and graph disagree on N.
VerifyResult verify_decodable(const SideInformationGraph& g, const IndexCode& code);

/// c^T = x^T L. Throws StructuralError if |x| != MN.
FqVector encode(const IndexCode& code, const FqVector& message);

/// Receiver i's estimate of x_{D_i}: sum_k alpha_k c_k - x^T u_j per demanded symbol.
/// `queried` is aligned with queries(i) and `side_info` with plan.side_info[i-1].
/// Throws StructuralError on mismatched inputs.
FqVector decode_receiver(const IndexCode& code, const DecodingPlan& plan, int receiver,
                         const FqVector& queried, const FqVector& side_info);

struct LocalityProfile {
  std::vector<Rational> per_receiver; // r_i = |R_i| / M
  Rational max;                       // r
  Rational average;                   // r_avg
  Rational rate;                      // beta = ell / M

  friend bool operator==(const LocalityProfile&, const LocalityProfile&) = default;
};

LocalityProfile locality_profile(const IndexCode& code);

struct QueryPartition {
  std::vector<IndexSet> unique;  // S_i: queried only by Rx_i
  std::vector<IndexSet> shared;  // M_i: queried by Rx_i and someone else
  IndexSet unique_all;           // S
  IndexSet shared_all;           // M
};

QueryPartition query_partition(const IndexCode& code);

/// Drops dependent queries (receivers ascending, columns ascending) until every R_i indexes
/// linearly independent columns, then removes unqueried columns and renumbers.
/// Throws PreconditionError if the code is not decodable.
IndexCode prune_queries(const SideInformationGraph& g, const IndexCode& code);

/// Rewrites the uniquely queried columns so that supp(L'_k) lies in D_i for k in S_i,
/// keeping ell, M, every R_i, and the shared columns. Throws PreconditionError if the
/// code is not decodable.
IndexCode normalize_unique_columns(const SideInformationGraph& g, const IndexCode& code);

/// N x N matrix with unit diagonal whose column i is u_i + e_i.
struct FittingMatrix {
  FqMatrix matrix;

  std::size_t rank() const { return ldic::rank(matrix); }
  std::vector<FqVector> null_space() const { return null_space_basis(matrix); }
  /// Diagonal all ones and entry (j, i) zero whenever j is neither i nor in K_i.
  bool fits(const SideInformationGraph& g) const;
};

/// Stacks the plan's witnesses. Throws Unsupported for M > 1.
FittingMatrix fitting_matrix_from_plan(const SideInformationGraph& g, const IndexCode& code,
                                       const DecodingPlan& plan);

/// Support of a vector as a 1-based index set.
IndexSet support(const FqVector& v);

} // namespace ldic
