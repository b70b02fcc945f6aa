#include "ldic/bounds.hpp"

#include "ldic/errors.hpp"

#include <map>
#include <random>
#include <set>

namespace ldic {

Rational cycle_tradeoff(int N, const Rational& r) {
  if (N < 3) {
    throw PreconditionError("the closed-form trade-off needs N >= 3");
  }
  if (r < 1) {
    throw PreconditionError("locality r >= 1 for any valid index coding scheme");
  }
  const Rational slope_part = Rational(N) * (Rational(N - 1) - r) / Rational(N - 2);
  return std::max(Rational(N - 1), slope_part);
}

int min_message_length(int N) {
  if (N < 3) {
    throw PreconditionError("min_message_length needs N >= 3");
  }
  return N % 2 == 1 ? N : N / 2;
}

std::optional<Rational> optimal_cycle_locality_for_M(int N, int M) {
  if (N < 3 || M < 1) {
    throw PreconditionError("optimal_cycle_locality_for_M needs N >= 3 and M >= 1");
  }
  if (2 * M < N) {
    return Rational(2);
  }
  if (N % 2 == 1 && M < N) {
    return Rational(2) - Rational(1, M);
  }
  if (M % min_message_length(N) == 0) {
    return Rational(2 * (N - 1), N);
  }
  return std::nullopt;
}

ScalarDeficitBounds scalar_bounds_minrank_deficit(const SideInformationGraph& g, const PrimeField& field,
                                                  std::uint64_t budget) {
  const int N = g.size();
  const MinrankResult mr = minrank_bruteforce(g, field, budget);
  if (mr.value != N - 1) {
    throw PreconditionError("minrk_q(G) = " + std::to_string(mr.value) + ", the deficit-one optimum needs N-1 = " +
                            std::to_string(N - 1));
  }
  const auto cycle = shortest_directed_cycle(g);
  if (!cycle || cycle->length < 3) {
    throw PreconditionError("shortest directed cycle has length 2; the optimum there is r = r_avg = 1");
  }
  return ScalarDeficitBounds{Rational(2), Rational(N + cycle->length - 2, N)};
}

std::string to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::Holds:
    return "holds";
  case CheckStatus::Violated:
    return "violated";
  case CheckStatus::NotApplicable:
    return "n/a";
  }
  return "?";
}

bool ConverseReport::all_hold() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::Violated) {
      return false;
    }
  }
  return true;
}

const CheckResult* ConverseReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name && c.status != CheckStatus::NotApplicable) {
      return &c;
    }
  }
  return nullptr;
}

namespace {

CheckResult inequality(std::string name, Rational lhs, Rational rhs, IndexSet subset = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.status = c.slack >= 0 ? CheckStatus::Holds : CheckStatus::Violated;
  c.subset = std::move(subset);
  return c;
}

CheckResult not_applicable(std::string name, std::string note, IndexSet subset = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.note = std::move(note);
  c.subset = std::move(subset);
  return c;
}

// Supports of nonzero vectors of the span of `basis`; exhaustive up to `limit` vectors,
// otherwise the basis itself plus `limit` random combinations.
std::set<IndexSet> null_supports(const PrimeField& f, const std::vector<FqVector>& basis, std::uint64_t limit,
                                 std::uint64_t seed) {
  std::set<IndexSet> supports;
  if (basis.empty()) {
    return supports;
  }
  const std::size_t n = basis.front().size();
  auto combine = [&](const std::vector<Elem>& coeffs) {
    FqVector v(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b] == 0) {
        continue;
      }
      for (std::size_t r = 0; r < n; ++r) {
        v[r] = f.add(v[r], f.mul(coeffs[b], basis[b][r]));
      }
    }
    return v;
  };

  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (total > limit / f.q()) {
      exhaustive = false;
      break;
    }
    total *= f.q();
  }

  std::vector<Elem> coeffs(basis.size(), 0);
  if (exhaustive) {
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t x = idx;
      for (Elem& c : coeffs) {
        c = static_cast<Elem>(x % f.q());
        x /= f.q();
      }
      supports.insert(support(combine(coeffs)));
    }
    return supports;
  }

  for (const FqVector& b : basis) {
    supports.insert(support(b));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> digit(0, f.q() - 1);
  for (std::uint64_t s = 0; s < limit; ++s) {
    for (Elem& c : coeffs) {
      c = digit(rng);
    }
    FqVector v = combine(coeffs);
    if (!is_zero(v)) {
      supports.insert(support(v));
    }
  }
  return supports;
}

} // namespace

ConverseReport converse_checks(const SideInformationGraph& g, const IndexCode& code, const DecodingPlan& plan,
                               const ConverseOptions& options) {
  ConverseReport report;
  const int N = code.receivers();
  const int M = code.message_length();
  const LocalityProfile profile = locality_profile(code);
  const QueryPartition partition = query_partition(code);

  const auto queried = partition.unique_all.size() + partition.shared_all.size();
  if (queried == static_cast<std::size_t>(code.length())) {
    const Rational rhs = Rational(M) * (Rational(2) * profile.rate - Rational(N) * profile.average);
    report.checks.push_back(
        inequality("lemma1", Rational(static_cast<std::int64_t>(partition.unique_all.size())), rhs));
  } else {
    report.checks.push_back(not_applicable("lemma1", "some codeword symbols are never queried"));
  }

  if (M != 1) {
    for (const char* name : {"lemma2", "lemma3", "corollary1", "lemma5", "lemma6"}) {
      report.checks.push_back(not_applicable(name, "scalar codes only"));
    }
    return report;
  }

  std::optional<int> minrank_g;
  try {
    minrank_g = minrank_bruteforce(g, code.field(), options.minrank_budget).value;
  } catch (const BudgetExceeded&) {
  }

  std::map<IndexSet, std::optional<int>> minrank_cache;
  auto minrank_of = [&](const IndexSet& s) -> std::optional<int> {
    if (auto it = minrank_cache.find(s); it != minrank_cache.end()) {
      return it->second;
    }
    std::optional<int> value;
    try {
      value = minrank_bruteforce(induced_subgraph(g, s).graph, code.field(), options.minrank_budget).value;
    } catch (const BudgetExceeded&) {
    }
    minrank_cache.emplace(s, value);
    return value;
  };

  const FittingMatrix a = fitting_matrix_from_plan(g, code, plan);
  const auto supports = null_supports(code.field(), a.null_space(), options.null_vector_limit, options.sample_seed);

  for (const IndexSet& s : supports) {
    std::set<int> union_r;
    std::int64_t sum_r = 0;
    for (int i : s) {
      const IndexSet& r = code.queries(i);
      union_r.insert(r.begin(), r.end());
      sum_r += static_cast<std::int64_t>(r.size());
    }
    const auto union_size = static_cast<std::int64_t>(union_r.size());

    EchelonBasis span(code.field(), code.encoder().rows());
    std::size_t independent = 0;
    for (int k : union_r) {
      independent += span.insert(code.column(k)) ? 1 : 0;
    }
    bool all_used = true;
    for (int i : s) {
      for (Elem a : plan.witness(i, 1).alpha) {
        all_used = all_used && a != 0;
      }
    }
    if (independent != union_r.size()) {
      report.checks.push_back(not_applicable("lemma2", "queried columns are dependent", s));
    } else if (!all_used) {
      report.checks.push_back(not_applicable("lemma2", "plan leaves a queried column unused", s));
    } else {
      report.checks.push_back(inequality("lemma2", Rational(sum_r), Rational(2 * union_size), s));
    }

    const std::optional<int> minrank_s = minrank_of(s);
    if (minrank_s) {
      report.checks.push_back(inequality("lemma3", Rational(union_size), Rational(*minrank_s), s));
    } else {
      report.checks.push_back(not_applicable("lemma3", "minrank budget exceeded", s));
    }

    if (minrank_s && minrank_g && code.length() == *minrank_g) {
      report.checks.push_back(inequality("corollary1", Rational(sum_r), Rational(2 * *minrank_s), s));
    } else {
      report.checks.push_back(not_applicable("corollary1", "code length differs from minrank", s));
    }

    const bool has_cycle = !is_acyclic(induced_subgraph(g, s).graph);
    report.checks.push_back(inequality("lemma5", Rational(has_cycle ? 1 : 0), Rational(1), s));

    if (minrank_s && minrank_g && *minrank_g == N - 1) {
      report.checks.push_back(
          inequality("lemma6", Rational(*minrank_s), Rational(static_cast<std::int64_t>(s.size()) - 1), s));
    } else {
      report.checks.push_back(not_applicable("lemma6", "minrank of G is not N-1", s));
    }
  }
  return report;
}

} // namespace ldic
