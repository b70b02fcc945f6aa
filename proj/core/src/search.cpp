#include "ldic/search.hpp"

#include "ldic/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <tuple>

namespace ldic {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) {
    return kSaturated;
  }
  return a * b;
}

std::uint64_t normalized_column_count(std::uint32_t q, int dim) {
  std::uint64_t total = 1;
  for (int d = 0; d < dim; ++d) {
    total = saturating_mul(total, q);
  }
  return total == kSaturated ? kSaturated : (total - 1) / (q - 1);
}

// C(n + k - 1, k): multisets of size k from n items.
std::uint64_t multiset_count(std::uint64_t n, int k) {
  if (n == kSaturated) {
    return kSaturated;
  }
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n + i - 1) / i stays integral at every step
    const std::uint64_t factor = n + static_cast<std::uint64_t>(i) - 1;
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t reduced = result / g;
    const std::uint64_t rest = static_cast<std::uint64_t>(i) / g;
    result = saturating_mul(reduced, factor / rest);
    if (result == kSaturated) {
      return kSaturated;
    }
  }
  return result;
}

using ProfileKey = std::tuple<Rational, Rational, Rational>;

struct Found {
  std::vector<std::size_t> tuple;     // indices into the column list, non-decreasing
  std::vector<IndexSet> queries;
};

// Vector representation policy for GF(2) with at most 64 coordinates.
struct PackedOps {
  using Vector = std::uint64_t;
  using Basis = gf2::PackedBasis;

  std::size_t dim;

  Basis basis() const { return Basis{}; }
  Vector from_digits(std::uint64_t code) const { return code; }
  Vector project(Vector v, Vector keep_mask) const { return v & keep_mask; }
  Vector unit(std::size_t index) const { return Vector{1} << index; }
  Vector mask(const IndexSet& excluded) const {
    Vector m = dim == 64 ? ~Vector{0} : ((Vector{1} << dim) - 1);
    for (int idx : excluded) {
      m &= ~(Vector{1} << (idx - 1));
    }
    return m;
  }
  FqVector to_fq(Vector v) const {
    FqVector out(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
      out[r] = static_cast<Elem>((v >> r) & 1U);
    }
    return out;
  }
  bool normalized(std::uint64_t) const { return true; }
};

struct GenericOps {
  using Vector = FqVector;
  using Basis = EchelonBasis;

  PrimeField field;
  std::size_t dim;

  Basis basis() const { return Basis(field, dim); }
  Vector from_digits(std::uint64_t code) const {
    Vector v(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
      v[r] = static_cast<Elem>(code % field.q());
      code /= field.q();
    }
    return v;
  }
  Vector project(Vector v, const Vector& keep_mask) const {
    for (std::size_t r = 0; r < dim; ++r) {
      if (keep_mask[r] == 0) {
        v[r] = 0;
      }
    }
    return v;
  }
  Vector unit(std::size_t index) const { return unit_vector(dim, index); }
  Vector mask(const IndexSet& excluded) const {
    Vector m(dim, 1);
    for (int idx : excluded) {
      m[static_cast<std::size_t>(idx - 1)] = 0;
    }
    return m;
  }
  FqVector to_fq(const Vector& v) const { return v; }
  // First nonzero coordinate (lowest row) equal to 1.
  bool normalized(std::uint64_t code) const {
    while (code % field.q() == 0) {
      code /= field.q();
    }
    return code % field.q() == 1;
  }
};

template <typename Ops>
class Searcher {
public:
  Searcher(Ops ops, const SideInformationGraph& g, const PrimeField& field, int M, int ell,
           std::optional<Rational> cap)
      : ops_(std::move(ops)), field_(field), M_(M), N_(g.size()), ell_(ell), cap_(std::move(cap)) {
    const IndexExpansion expansion = expand_indices(g, M);
    for (int i = 0; i < N_; ++i) {
      keep_.push_back(ops_.mask(expansion.side_info[static_cast<std::size_t>(i)]));
      std::vector<typename Ops::Vector> units;
      for (int j : expansion.demands[static_cast<std::size_t>(i)]) {
        units.push_back(ops_.unit(static_cast<std::size_t>(j - 1)));
      }
      demand_units_.push_back(std::move(units));
    }
    std::uint64_t total = 1;
    for (std::size_t d = 0; d < ops_.dim; ++d) {
      total *= field.q();
    }
    for (std::uint64_t code = 1; code < total; ++code) {
      if (ops_.normalized(code)) {
        columns_.push_back(ops_.from_digits(code));
      }
    }
  }

  std::vector<ParetoPoint> run(unsigned threads) {
    const std::size_t tasks = columns_.size();
    std::vector<std::map<ProfileKey, Found>> results(tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < tasks; t = next++) {
        results[t] = run_task(t);
      }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back(worker);
      }
      for (std::thread& th : pool) {
        th.join();
      }
    }

    // Tasks are ordered by first column, so the first hit per profile is the
    // lexicographically smallest witness regardless of thread count.
    std::map<ProfileKey, Found> merged;
    for (auto& r : results) {
      for (auto& [key, found] : r) {
        merged.emplace(key, std::move(found));
      }
    }
    std::vector<ParetoPoint> points;
    for (auto& [key, found] : merged) {
      points.push_back(ParetoPoint{std::get<0>(key), std::get<1>(key), std::get<2>(key), witness(found)});
    }
    return pareto_frontier(std::move(points));
  }

private:
  std::map<ProfileKey, Found> run_task(std::size_t first) const {
    std::map<ProfileKey, Found> found;
    if (ell_ == 0) {
      return found;
    }
    std::vector<std::size_t> tuple(static_cast<std::size_t>(ell_), first);
    while (true) {
      evaluate(tuple, found);
      // Next non-decreasing tuple with tuple[0] fixed.
      std::size_t pos = tuple.size();
      while (pos > 1 && tuple[pos - 1] + 1 == columns_.size()) {
        --pos;
      }
      if (pos <= 1) {
        break;
      }
      const std::size_t value = tuple[pos - 1] + 1;
      for (std::size_t k = pos - 1; k < tuple.size(); ++k) {
        tuple[k] = value;
      }
    }
    return found;
  }

  bool decodes(std::size_t receiver, const std::vector<typename Ops::Vector>& projected,
               const std::vector<std::size_t>& subset) const {
    typename Ops::Basis basis = ops_.basis();
    for (std::size_t k : subset) {
      basis.insert(projected[k]);
    }
    for (const auto& e : demand_units_[receiver]) {
      if (!basis.contains(e)) {
        return false;
      }
    }
    return true;
  }

  // Smallest query set (lexicographically first among smallest) or nullopt.
  std::optional<std::vector<std::size_t>> min_queries(std::size_t receiver,
                                                      const std::vector<std::size_t>& tuple) const {
    std::vector<typename Ops::Vector> projected;
    projected.reserve(tuple.size());
    for (std::size_t idx : tuple) {
      projected.push_back(ops_.project(columns_[idx], keep_[receiver]));
    }
    const auto n = tuple.size();
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) {
      all[k] = k;
    }
    if (!decodes(receiver, projected, all)) {
      return std::nullopt;
    }
    for (std::size_t size = static_cast<std::size_t>(M_); size < n; ++size) {
      std::vector<std::size_t> subset(size);
      for (std::size_t k = 0; k < size; ++k) {
        subset[k] = k;
      }
      while (true) {
        if (decodes(receiver, projected, subset)) {
          return subset;
        }
        std::size_t pos = size;
        while (pos > 0 && subset[pos - 1] == n - size + pos - 1) {
          --pos;
        }
        if (pos == 0) {
          break;
        }
        ++subset[pos - 1];
        for (std::size_t k = pos; k < size; ++k) {
          subset[k] = subset[k - 1] + 1;
        }
      }
    }
    return all;
  }

  void evaluate(const std::vector<std::size_t>& tuple, std::map<ProfileKey, Found>& found) const {
    std::vector<IndexSet> queries;
    std::int64_t total = 0;
    std::int64_t largest = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(N_); ++i) {
      const auto q = min_queries(i, tuple);
      if (!q) {
        return;
      }
      IndexSet r;
      for (std::size_t k : *q) {
        r.push_back(static_cast<int>(k) + 1);
      }
      total += static_cast<std::int64_t>(r.size());
      largest = std::max<std::int64_t>(largest, static_cast<std::int64_t>(r.size()));
      queries.push_back(std::move(r));
    }
    const Rational r(largest, M_);
    if (cap_ && r > *cap_) {
      return;
    }
    ProfileKey key{Rational(ell_, M_), r, Rational(total, static_cast<std::int64_t>(M_) * N_)};
    found.emplace(key, Found{tuple, std::move(queries)});
  }

  IndexCode witness(const Found& found) const {
    std::vector<FqVector> cols;
    for (std::size_t idx : found.tuple) {
      cols.push_back(ops_.to_fq(columns_[idx]));
    }
    return IndexCode(M_, N_, FqMatrix::from_columns(field_, ops_.dim, cols), found.queries);
  }

  Ops ops_;
  PrimeField field_;
  int M_;
  int N_;
  int ell_;
  std::optional<Rational> cap_;
  std::vector<typename Ops::Vector> keep_;
  std::vector<std::vector<typename Ops::Vector>> demand_units_;
  std::vector<typename Ops::Vector> columns_;
};

bool dominates(const ParetoPoint& a, const ParetoPoint& b) {
  const bool no_worse = a.beta <= b.beta && a.r <= b.r && a.r_avg <= b.r_avg;
  const bool better = a.beta < b.beta || a.r < b.r || a.r_avg < b.r_avg;
  return no_worse && better;
}

} // namespace

std::uint64_t search_candidate_count(int N, std::uint32_t q, int M, int ell) {
  return multiset_count(normalized_column_count(q, M * N), ell);
}

std::vector<ParetoPoint> pareto_frontier(std::vector<ParetoPoint> points) {
  std::vector<ParetoPoint> kept;
  for (std::size_t a = 0; a < points.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < points.size() && keep; ++b) {
      if (b == a) {
        continue;
      }
      const bool same = points[b].beta == points[a].beta && points[b].r == points[a].r &&
                        points[b].r_avg == points[a].r_avg;
      keep = !(dominates(points[b], points[a]) || (same && b < a));
    }
    if (keep) {
      kept.push_back(points[a]);
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [](const ParetoPoint& x, const ParetoPoint& y) {
    return std::tie(x.beta, x.r, x.r_avg) < std::tie(y.beta, y.r, y.r_avg);
  });
  return kept;
}

std::vector<ParetoPoint> exhaustive_vector_search(const SideInformationGraph& g, const PrimeField& field, int M,
                                                  int ell, std::optional<Rational> locality_cap,
                                                  const SearchOptions& options) {
  if (M < 1 || ell < 0) {
    throw PreconditionError("search needs M >= 1 and ell >= 0");
  }
  const std::uint64_t candidates = search_candidate_count(g.size(), field.q(), M, ell);
  if (candidates > options.budget) {
    throw BudgetExceeded("exhaustive search needs " +
                         (candidates == kSaturated ? std::string("> 2^64") : std::to_string(candidates)) +
                         " encoders, budget is " + std::to_string(options.budget));
  }
  const auto dim = static_cast<std::size_t>(M * g.size());
  const unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  if (field.q() == 2 && dim <= 64) {
    return Searcher<PackedOps>(PackedOps{dim}, g, field, M, ell, locality_cap).run(threads);
  }
  return Searcher<GenericOps>(GenericOps{field, dim}, g, field, M, ell, locality_cap).run(threads);
}

std::vector<ParetoPoint> exhaustive_scalar_search(const SideInformationGraph& g, const PrimeField& field, int ell,
                                                  std::optional<Rational> locality_cap,
                                                  const SearchOptions& options) {
  return exhaustive_vector_search(g, field, 1, ell, std::move(locality_cap), options);
}

} // namespace ldic
