#include "ldic/constructions.hpp"

#include "ldic/errors.hpp"

#include <algorithm>
#include <string>

namespace ldic {

IndexCode uncoded(const SideInformationGraph& g, int M, const PrimeField& field) {
  if (M < 1) {
    throw PreconditionError("message length M must be >= 1");
  }
  const IndexExpansion expansion = expand_indices(g, M);
  const auto dim = static_cast<std::size_t>(M * g.size());
  return IndexCode(M, g.size(), FqMatrix::identity(field, dim), expansion.demands);
}

IndexCode cycle_scalar_code(int N, const PrimeField& field, int anchor) {
  if (N < 3) {
    throw PreconditionError("cycle code needs N >= 3 (use minrank_deficit_code for 2-cycles)");
  }
  if (anchor < 1 || anchor > N) {
    throw PreconditionError("anchor " + std::to_string(anchor) + " outside [1.." + std::to_string(N) + "]");
  }
  const auto n = static_cast<std::size_t>(N);
  const int shift = anchor - 1;

  // Base code rows: x_1 feeds every symbol, x_w (w >= 2) feeds symbol w-1.
  auto base_of = [&](int v) { return ((v - 1 - shift) % N + N) % N + 1; };

  FqMatrix encoder(field, n, n - 1);
  std::vector<IndexSet> queries(n);
  for (int v = 1; v <= N; ++v) {
    const int w = base_of(v);
    const auto row = static_cast<std::size_t>(v - 1);
    if (w == 1) {
      for (std::size_t c = 0; c + 1 < n; ++c) {
        encoder.set(row, c, 1);
      }
      queries[row] = {1};
    } else {
      encoder.set(row, static_cast<std::size_t>(w - 2), 1);
      queries[row] = w == N ? IndexSet{N - 1} : IndexSet{w - 1, w};
    }
  }
  return IndexCode(1, N, std::move(encoder), std::move(queries));
}

int anchor_for_tuple(int N, int tuple) {
  if (tuple < 1 || tuple > N) {
    throw PreconditionError("locality tuple " + std::to_string(tuple) + " outside [1.." + std::to_string(N) + "]");
  }
  return tuple % N + 1;
}

IndexCode time_share(std::span<const IndexCode> codes) {
  if (codes.empty()) {
    throw StructuralError("time_share needs at least one code");
  }
  const PrimeField field = codes.front().field();
  const int N = codes.front().receivers();
  int M = 0;
  int ell = 0;
  for (const IndexCode& c : codes) {
    if (c.field() != field || c.receivers() != N) {
      throw StructuralError("time_share requires every code to share q and N");
    }
    M += c.message_length();
    ell += c.length();
  }

  FqMatrix encoder(field, static_cast<std::size_t>(M * N), static_cast<std::size_t>(ell));
  std::vector<IndexSet> queries(static_cast<std::size_t>(N));
  int component_offset = 0;
  int column_offset = 0;
  for (const IndexCode& c : codes) {
    const int Mt = c.message_length();
    for (int i = 1; i <= N; ++i) {
      for (int m = 1; m <= Mt; ++m) {
        const auto local_row = static_cast<std::size_t>((i - 1) * Mt + m - 1);
        const auto global_row = static_cast<std::size_t>((i - 1) * M + component_offset + m - 1);
        for (int k = 0; k < c.length(); ++k) {
          encoder.set(global_row, static_cast<std::size_t>(column_offset + k),
                      c.encoder().at(local_row, static_cast<std::size_t>(k)));
        }
      }
      for (int k : c.queries(i)) {
        queries[static_cast<std::size_t>(i - 1)].push_back(column_offset + k);
      }
    }
    component_offset += Mt;
    column_offset += c.length();
  }
  return IndexCode(M, N, std::move(encoder), std::move(queries));
}

namespace {

std::vector<int> full_period(int N) {
  std::vector<int> tuples;
  if (N % 2 == 0) {
    for (int t = 1; t < N; t += 2) {
      tuples.push_back(t);
    }
  } else {
    for (int t = 1; t <= N; ++t) {
      tuples.push_back(t);
    }
  }
  return tuples;
}

// Odd N, N/2 <= M < N: 1, 3, ..., N-2, N, 2, 4, ..., 2M-(N+1).
std::vector<int> odd_partial_schedule(int N, int M) {
  std::vector<int> tuples;
  for (int t = 1; t <= N - 2; t += 2) {
    tuples.push_back(t);
  }
  tuples.push_back(N);
  for (int t = 2; t <= 2 * M - (N + 1); t += 2) {
    tuples.push_back(t);
  }
  return tuples;
}

std::vector<int> short_schedule(int N, int M) {
  if (2 * M < N) {
    return std::vector<int>(static_cast<std::size_t>(M), 1);
  }
  return odd_partial_schedule(N, M);
}

} // namespace

RotationSchedule cycle_schedule(int N, int M, bool* heuristic) {
  if (N < 3 || M < 1) {
    throw PreconditionError("cycle schedule needs N >= 3 and M >= 1");
  }
  const std::vector<int> period = full_period(N);
  const int P = static_cast<int>(period.size());

  RotationSchedule schedule{N, {}};
  bool approximate = false;
  if (M % P == 0) {
    for (int rep = 0; rep < M / P; ++rep) {
      schedule.tuples.insert(schedule.tuples.end(), period.begin(), period.end());
    }
  } else if (M < P) {
    // M < N/2, or N odd with N/2 <= M < N.
    schedule.tuples = short_schedule(N, M);
  } else {
    approximate = true;
    for (int rep = 0; rep < M / P; ++rep) {
      schedule.tuples.insert(schedule.tuples.end(), period.begin(), period.end());
    }
    const std::vector<int> tail = short_schedule(N, M % P);
    schedule.tuples.insert(schedule.tuples.end(), tail.begin(), tail.end());
  }
  if (heuristic != nullptr) {
    *heuristic = approximate;
  }
  return schedule;
}

CycleVectorCode cycle_vector_code(int N, const PrimeField& field, int M) {
  bool heuristic = false;
  RotationSchedule schedule = cycle_schedule(N, M, &heuristic);
  std::vector<IndexCode> blocks;
  blocks.reserve(schedule.tuples.size());
  for (int t : schedule.tuples) {
    blocks.push_back(cycle_scalar_code(N, field, anchor_for_tuple(N, t)));
  }
  return CycleVectorCode{time_share(blocks), std::move(schedule), heuristic};
}

IndexCode minrank_deficit_code(const SideInformationGraph& g, const PrimeField& field) {
  const auto cycle = shortest_directed_cycle(g);
  if (!cycle) {
    throw PreconditionError("no cycle; minrank is N");
  }
  const int N = g.size();
  const auto n = static_cast<std::size_t>(N);
  const std::vector<Vertex>& c = cycle->vertices;
  const int Nc = cycle->length;

  FqMatrix encoder(field, n, n - 1);
  std::vector<IndexSet> queries(n);
  int next_column = 0;
  if (Nc == 2) {
    encoder.set(static_cast<std::size_t>(c[0] - 1), 0, 1);
    encoder.set(static_cast<std::size_t>(c[1] - 1), 0, 1);
    queries[static_cast<std::size_t>(c[0] - 1)] = {1};
    queries[static_cast<std::size_t>(c[1] - 1)] = {1};
    next_column = 1;
  } else {
    // Cycle code on C: symbol t is x_{c_1} + x_{c_{t+1}}.
    for (int t = 1; t < Nc; ++t) {
      encoder.set(static_cast<std::size_t>(c[0] - 1), static_cast<std::size_t>(t - 1), 1);
      encoder.set(static_cast<std::size_t>(c[static_cast<std::size_t>(t)] - 1), static_cast<std::size_t>(t - 1), 1);
    }
    for (int w = 1; w <= Nc; ++w) {
      IndexSet& r = queries[static_cast<std::size_t>(c[static_cast<std::size_t>(w - 1)] - 1)];
      if (w == 1) {
        r = {1};
      } else if (w == Nc) {
        r = {Nc - 1};
      } else {
        r = {w - 1, w};
      }
    }
    next_column = Nc - 1;
  }

  for (Vertex v = 1; v <= N; ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) {
      continue;
    }
    encoder.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(next_column), 1);
    queries[static_cast<std::size_t>(v - 1)] = {++next_column};
  }
  return IndexCode(1, N, std::move(encoder), std::move(queries));
}

} // namespace ldic
