#include "ldic/index_code.hpp"

#include "ldic/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ldic {

IndexCode::IndexCode(int M, int N, FqMatrix encoder, std::vector<IndexSet> queries)
    : M_(M), N_(N), encoder_(std::move(encoder)), queries_(std::move(queries)) {
  if (M_ < 1 || N_ < 1) {
    throw StructuralError("message length and receiver count must be positive");
  }
  if (encoder_.rows() != static_cast<std::size_t>(M_) * static_cast<std::size_t>(N_)) {
    throw StructuralError("encoder has " + std::to_string(encoder_.rows()) + " rows, expected M*N = " +
                          std::to_string(M_ * N_));
  }
  if (queries_.size() != static_cast<std::size_t>(N_)) {
    throw StructuralError("expected " + std::to_string(N_) + " query sets, got " +
                          std::to_string(queries_.size()));
  }
  const int ell = length();
  for (std::size_t i = 0; i < queries_.size(); ++i) {
    IndexSet& r = queries_[i];
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (int k : r) {
      if (k < 1 || k > ell) {
        throw StructuralError("receiver " + std::to_string(i + 1) + " queries column " + std::to_string(k) +
                              " outside [1.." + std::to_string(ell) + "]");
      }
    }
  }
}

namespace {

void require_same_receivers(const SideInformationGraph& g, const IndexCode& code) {
  if (g.size() != code.receivers()) {
    throw StructuralError("graph has " + std::to_string(g.size()) + " receivers, code has " +
                          std::to_string(code.receivers()));
  }
}

} // namespace

VerifyResult verify_decodable(const SideInformationGraph& g, const IndexCode& code) {
  require_same_receivers(g, code);
  const int M = code.message_length();
  const auto dim = static_cast<std::size_t>(M * code.receivers());
  const PrimeField& f = code.field();
  const IndexExpansion expansion = expand_indices(g, M);

  VerifyResult result;
  DecodingPlan plan;
  plan.side_info = expansion.side_info;
  plan.receivers.resize(static_cast<std::size_t>(code.receivers()));

  for (int i = 1; i <= code.receivers(); ++i) {
    const IndexSet& r = code.queries(i);
    const IndexSet& kcal = expansion.side_info[static_cast<std::size_t>(i - 1)];

    std::vector<FqVector> generators;
    generators.reserve(r.size() + kcal.size());
    for (int k : r) {
      generators.push_back(code.column(k));
    }
    for (int m : kcal) {
      generators.push_back(unit_vector(dim, static_cast<std::size_t>(m - 1)));
    }

    for (int j : expansion.demands[static_cast<std::size_t>(i - 1)]) {
      const auto y = solve_in_span(f, generators, unit_vector(dim, static_cast<std::size_t>(j - 1)));
      if (!y) {
        result.failures.emplace_back(i, j);
        continue;
      }
      SymbolWitness w;
      w.symbol = j;
      w.alpha.assign(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(r.size()));
      w.u.assign(dim, 0);
      for (std::size_t t = 0; t < kcal.size(); ++t) {
        w.u[static_cast<std::size_t>(kcal[t] - 1)] = f.neg((*y)[r.size() + t]);
      }
      plan.receivers[static_cast<std::size_t>(i - 1)].push_back(std::move(w));
    }
  }

  if (result.failures.empty()) {
    result.plan = std::move(plan);
  }
  return result;
}

FqVector encode(const IndexCode& code, const FqVector& message) {
  if (message.size() != code.encoder().rows()) {
    throw StructuralError("message length " + std::to_string(message.size()) + " != MN = " +
                          std::to_string(code.encoder().rows()));
  }
  return code.encoder().apply_left(message);
}

FqVector decode_receiver(const IndexCode& code, const DecodingPlan& plan, int receiver,
                         const FqVector& queried, const FqVector& side_info) {
  if (receiver < 1 || receiver > code.receivers() ||
      plan.receivers.size() != static_cast<std::size_t>(code.receivers()) ||
      plan.side_info.size() != plan.receivers.size()) {
    throw StructuralError("plan does not match receiver " + std::to_string(receiver));
  }
  const auto idx = static_cast<std::size_t>(receiver - 1);
  const IndexSet& r = code.queries(receiver);
  const IndexSet& kcal = plan.side_info[idx];
  if (queried.size() != r.size()) {
    throw StructuralError("receiver " + std::to_string(receiver) + " expects " + std::to_string(r.size()) +
                          " queried symbols, got " + std::to_string(queried.size()));
  }
  if (side_info.size() != kcal.size()) {
    throw StructuralError("receiver " + std::to_string(receiver) + " expects " + std::to_string(kcal.size()) +
                          " side-information symbols, got " + std::to_string(side_info.size()));
  }

  const PrimeField& f = code.field();
  const auto& witnesses = plan.receivers[idx];
  FqVector decoded;
  decoded.reserve(witnesses.size());
  for (const SymbolWitness& w : witnesses) {
    if (w.alpha.size() != r.size()) {
      throw StructuralError("witness for symbol " + std::to_string(w.symbol) + " does not match R_" +
                            std::to_string(receiver));
    }
    Elem value = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      value = f.add(value, f.mul(w.alpha[k], queried[k]));
    }
    for (std::size_t t = 0; t < kcal.size(); ++t) {
      value = f.sub(value, f.mul(w.u.at(static_cast<std::size_t>(kcal[t] - 1)), side_info[t]));
    }
    decoded.push_back(value);
  }
  return decoded;
}

LocalityProfile locality_profile(const IndexCode& code) {
  const auto M = static_cast<std::int64_t>(code.message_length());
  LocalityProfile p;
  Rational sum(0);
  for (const IndexSet& r : code.all_queries()) {
    const Rational ri(static_cast<std::int64_t>(r.size()), M);
    p.per_receiver.push_back(ri);
    sum += ri;
    p.max = std::max(p.max, ri);
  }
  p.average = sum / static_cast<std::int64_t>(code.receivers());
  p.rate = Rational(code.length(), M);
  return p;
}

QueryPartition query_partition(const IndexCode& code) {
  std::map<int, int> times_queried;
  for (const IndexSet& r : code.all_queries()) {
    for (int k : r) {
      ++times_queried[k];
    }
  }
  QueryPartition p;
  for (const IndexSet& r : code.all_queries()) {
    IndexSet& s = p.unique.emplace_back();
    IndexSet& m = p.shared.emplace_back();
    for (int k : r) {
      (times_queried[k] == 1 ? s : m).push_back(k);
    }
  }
  for (const auto& [k, count] : times_queried) {
    (count == 1 ? p.unique_all : p.shared_all).push_back(k);
  }
  return p;
}

IndexCode prune_queries(const SideInformationGraph& g, const IndexCode& code) {
  if (!verify_decodable(g, code).decodable()) {
    throw PreconditionError("prune_queries requires a decodable code");
  }
  const PrimeField& f = code.field();
  const std::size_t dim = code.encoder().rows();

  std::vector<IndexSet> queries = code.all_queries();
  for (IndexSet& r : queries) {
    const IndexSet original = r;
    for (int k : original) {
      EchelonBasis rest(f, dim);
      for (int other : r) {
        if (other != k) {
          rest.insert(code.column(other));
        }
      }
      if (rest.contains(code.column(k))) {
        r.erase(std::find(r.begin(), r.end(), k));
      }
    }
  }

  IndexSet used;
  for (const IndexSet& r : queries) {
    used.insert(used.end(), r.begin(), r.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<int> renumber(static_cast<std::size_t>(code.length()) + 1, 0);
  std::vector<FqVector> columns;
  for (std::size_t t = 0; t < used.size(); ++t) {
    renumber[static_cast<std::size_t>(used[t])] = static_cast<int>(t) + 1;
    columns.push_back(code.column(used[t]));
  }
  for (IndexSet& r : queries) {
    for (int& k : r) {
      k = renumber[static_cast<std::size_t>(k)];
    }
  }
  return IndexCode(code.message_length(), code.receivers(), FqMatrix::from_columns(f, dim, columns),
                   std::move(queries));
}

bool FittingMatrix::fits(const SideInformationGraph& g) const {
  const auto n = static_cast<std::size_t>(g.size());
  if (matrix.rows() != n || matrix.cols() != n) {
    return false;
  }
  for (Vertex i = 1; i <= g.size(); ++i) {
    for (Vertex j = 1; j <= g.size(); ++j) {
      const Elem a = matrix.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
      if (i == j ? a != 1 : (a != 0 && !g.has_edge(i, j))) {
        return false;
      }
    }
  }
  return true;
}

FittingMatrix fitting_matrix_from_plan(const SideInformationGraph& g, const IndexCode& code,
                                       const DecodingPlan& plan) {
  require_same_receivers(g, code);
  if (code.message_length() != 1) {
    throw Unsupported("fitting matrices are defined for scalar codes (M = 1) only");
  }
  const auto n = static_cast<std::size_t>(code.receivers());
  if (plan.receivers.size() != n) {
    throw StructuralError("plan covers " + std::to_string(plan.receivers.size()) + " receivers, expected " +
                          std::to_string(n));
  }
  FqMatrix a(code.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const SymbolWitness& w = plan.receivers[i].at(0);
    for (std::size_t r = 0; r < n; ++r) {
      a.set(r, i, w.u.at(r));
    }
    a.set(i, i, code.field().add(a.at(i, i), 1));
  }
  return FittingMatrix{std::move(a)};
}

IndexSet support(const FqVector& v) {
  IndexSet s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) {
      s.push_back(static_cast<int>(k) + 1);
    }
  }
  return s;
}

} // namespace ldic
