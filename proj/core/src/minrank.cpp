#include "ldic/bounds.hpp"
#include "ldic/errors.hpp"

#include <bit>
#include <string>

namespace ldic {

namespace {

// q^exponent, saturating at limit + 1.
std::uint64_t bounded_power(std::uint64_t q, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::size_t e = 0; e < exponent; ++e) {
    if (value > limit / q) {
      return limit + 1;
    }
    value *= q;
  }
  return value;
}

// Column i of a fitting matrix: e_i plus free entries on rows K_i, enumerated as base-q digits.
struct ColumnSpace {
  std::size_t vertex;            // 0-based
  std::vector<std::size_t> free; // 0-based rows
  std::uint64_t count;           // q^|free|
};

struct GenericOps {
  using Vector = FqVector;
  using Basis = EchelonBasis;

  PrimeField field;
  std::size_t n;

  Basis empty_basis() const { return Basis(field, n); }
  Vector column(const ColumnSpace& cs, std::uint64_t code) const {
    Vector v(n, 0);
    v[cs.vertex] = 1;
    for (std::size_t k = 0; k < cs.free.size(); ++k) {
      v[cs.free[k]] = static_cast<Elem>(code % field.q());
      code /= field.q();
    }
    return v;
  }
  FqVector to_fq(const Vector& v) const { return v; }
};

struct PackedOps {
  using Vector = std::uint64_t;
  using Basis = gf2::PackedBasis;

  std::size_t n;

  Basis empty_basis() const { return Basis{}; }
  Vector column(const ColumnSpace& cs, std::uint64_t code) const {
    Vector v = Vector{1} << cs.vertex;
    for (std::size_t k = 0; k < cs.free.size(); ++k) {
      if ((code >> k) & 1U) {
        v |= Vector{1} << cs.free[k];
      }
    }
    return v;
  }
  FqVector to_fq(Vector v) const {
    FqVector out(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      out[r] = static_cast<Elem>((v >> r) & 1U);
    }
    return out;
  }
};

template <typename Ops>
class MinrankSearch {
public:
  MinrankSearch(Ops ops, std::vector<ColumnSpace> columns, int lower_bound)
      : ops_(std::move(ops)), columns_(std::move(columns)), lower_(lower_bound),
        best_(static_cast<int>(columns_.size()) + 1) {}

  void run() {
    chosen_.resize(columns_.size());
    descend(0, ops_.empty_basis());
  }

  int best() const { return best_; }
  const std::vector<typename Ops::Vector>& witness() const { return witness_; }

private:
  void descend(std::size_t depth, const typename Ops::Basis& basis) {
    if (done_ || static_cast<int>(basis.dimension()) >= best_) {
      return;
    }
    if (depth == columns_.size()) {
      best_ = static_cast<int>(basis.dimension());
      witness_ = chosen_;
      done_ = best_ <= lower_;
      return;
    }
    const ColumnSpace& cs = columns_[depth];
    for (std::uint64_t code = 0; code < cs.count && !done_; ++code) {
      chosen_[depth] = ops_.column(cs, code);
      typename Ops::Basis next = basis;
      next.insert(chosen_[depth]);
      descend(depth + 1, next);
    }
  }

  Ops ops_;
  std::vector<ColumnSpace> columns_;
  int lower_;
  int best_;
  bool done_ = false;
  std::vector<typename Ops::Vector> chosen_;
  std::vector<typename Ops::Vector> witness_;
};

template <typename Ops>
MinrankResult run_search(const Ops& ops, std::vector<ColumnSpace> columns, int lower, const PrimeField& field) {
  const std::size_t n = columns.size();
  MinrankSearch<Ops> search(ops, std::move(columns), lower);
  search.run();
  std::vector<FqVector> cols;
  cols.reserve(n);
  for (const auto& v : search.witness()) {
    cols.push_back(ops.to_fq(v));
  }
  return MinrankResult{search.best(), FittingMatrix{FqMatrix::from_columns(field, n, cols)}};
}

} // namespace

int max_acyclic_induced_subgraph(const SideInformationGraph& g) {
  const int n = g.size();
  if (n > 24) {
    return n > 0 ? 1 : 0;
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j : g.side_info(i)) {
      out[static_cast<std::size_t>(i - 1)] |= std::uint32_t{1} << (j - 1);
    }
  }
  auto acyclic = [&](std::uint32_t subset) {
    std::uint32_t remaining = subset;
    bool progress = true;
    while (remaining != 0 && progress) {
      progress = false;
      for (int v = 0; v < n; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        if ((remaining & bit) != 0 && (out[static_cast<std::size_t>(v)] & remaining) == 0) {
          remaining &= ~bit;
          progress = true;
        }
      }
    }
    return remaining == 0;
  };
  int best = 0;
  const std::uint32_t limit = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n);
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    const int size = std::popcount(subset);
    if (size > best && acyclic(subset)) {
      best = size;
    }
  }
  return best;
}

MinrankResult minrank_bruteforce(const SideInformationGraph& g, const PrimeField& field, std::uint64_t budget) {
  const auto n = static_cast<std::size_t>(g.size());
  const std::uint64_t candidates = bounded_power(field.q(), g.edge_count(), budget);
  if (candidates > budget) {
    throw BudgetExceeded("minrank search needs q^" + std::to_string(g.edge_count()) +
                         " candidates, budget is " + std::to_string(budget));
  }

  std::vector<ColumnSpace> columns;
  for (Vertex i = 1; i <= g.size(); ++i) {
    ColumnSpace cs{static_cast<std::size_t>(i - 1), {}, 0};
    for (Vertex j : g.side_info(i)) {
      cs.free.push_back(static_cast<std::size_t>(j - 1));
    }
    cs.count = bounded_power(field.q(), cs.free.size(), budget);
    columns.push_back(std::move(cs));
  }
  const int lower = max_acyclic_induced_subgraph(g);

  if (field.q() == 2 && n <= 64) {
    return run_search(PackedOps{n}, std::move(columns), lower, field);
  }
  return run_search(GenericOps{field, n}, std::move(columns), lower, field);
}

} // namespace ldic
