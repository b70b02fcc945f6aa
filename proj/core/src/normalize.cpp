#include "ldic/errors.hpp"
#include "ldic/index_code.hpp"

#include <string>

namespace ldic {

namespace {

// Basis (in D-local coordinates, length |D|) of (span(generators) ∩ U_D), where U_D is the
// coordinate subspace on `demands`. A null vector (a, b) of [G | E_D] gives G a = -E_D b.
EchelonBasis intersect_with_demands(const PrimeField& f, std::size_t dim, const std::vector<FqVector>& generators,
                                    const IndexSet& demands) {
  std::vector<FqVector> stacked = generators;
  for (int d : demands) {
    stacked.push_back(unit_vector(dim, static_cast<std::size_t>(d - 1)));
  }
  const FqMatrix h = FqMatrix::from_columns(f, dim, stacked);

  EchelonBasis within(f, demands.size());
  for (const FqVector& z : null_space_basis(h)) {
    FqVector local(demands.size());
    for (std::size_t t = 0; t < demands.size(); ++t) {
      local[t] = f.neg(z[generators.size() + t]);
    }
    within.insert(local);
  }
  return within;
}

} // namespace

IndexCode normalize_unique_columns(const SideInformationGraph& g, const IndexCode& code) {
  if (!verify_decodable(g, code).decodable()) {
    throw PreconditionError("normalize_unique_columns requires a decodable code");
  }
  const PrimeField& f = code.field();
  const std::size_t dim = code.encoder().rows();
  const IndexExpansion expansion = expand_indices(g, code.message_length());
  const QueryPartition partition = query_partition(code);

  FqMatrix encoder = code.encoder();
  for (int i = 1; i <= code.receivers(); ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    const IndexSet& unique = partition.unique[idx];
    if (unique.empty()) {
      continue;
    }
    const IndexSet& demands = expansion.demands[idx];

    // W_i = (V_{M_i} + U_{K_i}) ∩ U_{D_i}; shared columns are never rewritten.
    std::vector<FqVector> generators;
    for (int k : partition.shared[idx]) {
      generators.push_back(code.column(k));
    }
    for (int m : expansion.side_info[idx]) {
      generators.push_back(unit_vector(dim, static_cast<std::size_t>(m - 1)));
    }
    EchelonBasis basis = intersect_with_demands(f, dim, generators, demands);

    // Extend a basis of W_i to U_{D_i} with standard vectors.
    std::vector<std::size_t> extension;
    for (std::size_t t = 0; t < demands.size(); ++t) {
      if (basis.insert(unit_vector(demands.size(), t))) {
        extension.push_back(t);
      }
    }
    if (extension.size() > unique.size()) {
      throw PreconditionError("receiver " + std::to_string(i) + " needs " + std::to_string(extension.size()) +
                              " uniquely queried columns but has " + std::to_string(unique.size()));
    }

    for (std::size_t s = 0; s < unique.size(); ++s) {
      const auto col = static_cast<std::size_t>(unique[s] - 1);
      for (std::size_t r = 0; r < dim; ++r) {
        encoder.set(r, col, 0);
      }
      if (s < extension.size()) {
        encoder.set(static_cast<std::size_t>(demands[extension[s]] - 1), col, 1);
      }
    }
  }
  return IndexCode(code.message_length(), code.receivers(), std::move(encoder), code.all_queries());
}

} // namespace ldic
