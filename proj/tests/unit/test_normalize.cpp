#include "ldic/bounds.hpp"
#include "ldic/constructions.hpp"
#include "ldic/errors.hpp"
#include "ldic/index_code.hpp"
#include "ldic/serialize.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ldic;

namespace {

void expect_normalized(const SideInformationGraph& g, const IndexCode& in, const IndexCode& out) {
  EXPECT_EQ(out.length(), in.length());
  EXPECT_EQ(out.message_length(), in.message_length());
  EXPECT_EQ(out.all_queries(), in.all_queries());
  EXPECT_EQ(locality_profile(out), locality_profile(in));
  EXPECT_TRUE(oracle::decodable(g, out));
  const QueryPartition part = query_partition(in);
  const int M = in.message_length();
  for (int i = 1; i <= in.receivers(); ++i) {
    for (int k : part.unique[static_cast<std::size_t>(i - 1)]) {
      for (int row : support(out.column(k))) {
        EXPECT_GT(row, (i - 1) * M);
        EXPECT_LE(row, i * M);
      }
    }
  }
  for (int k : part.shared_all) {
    EXPECT_EQ(out.column(k), in.column(k));
  }
}

} // namespace

TEST(Normalize, CycleScalarUnchanged) {
  const auto g = SideInformationGraph::directed_cycle(4);
  const IndexCode code = cycle_scalar_code(4, PrimeField(2), 1);
  EXPECT_EQ(normalize_unique_columns(g, code), code);
}

TEST(Normalize, UncodedUnchanged) {
  const auto g = SideInformationGraph::directed_cycle(3);
  const IndexCode code = uncoded(g, 2, PrimeField(3));
  EXPECT_EQ(normalize_unique_columns(g, code), code);
}

TEST(Normalize, ThreeCycleUniqueColumnsRewritten) {
  const auto g = SideInformationGraph::directed_cycle(3);
  const PrimeField f(2);
  const std::vector<FqVector> cols = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  const IndexCode code(1, 3, FqMatrix::from_columns(f, 3, cols), {{1}, {2}, {3}});
  ASSERT_TRUE(verify_decodable(g, code).decodable());
  const IndexCode out = normalize_unique_columns(g, code);
  expect_normalized(g, code, out);
  EXPECT_EQ(out.encoder(), FqMatrix::identity(f, 3));
}

TEST(Normalize, RejectsUndecodableInput) {
  // Receiver 2 only sees (1,0,1) and knows x_3, so it cannot recover x_2.
  const auto g = SideInformationGraph::directed_cycle(3);
  const PrimeField f(2);
  const std::vector<FqVector> cols = {{1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
  const IndexCode code(1, 3, FqMatrix::from_columns(f, 3, cols), {{1}, {2}, {3}});
  EXPECT_FALSE(verify_decodable(g, code).decodable());
  EXPECT_THROW(normalize_unique_columns(g, code), PreconditionError);
}

TEST(Normalize, SharedAndUniqueMix) {
  // 2-cycle {1,2} plus receiver 3 knowing x_1: column 1 shared, columns 2 and 3 unique.
  const SideInformationGraph g({{2}, {1}, {1}});
  const PrimeField f(3);
  const std::vector<FqVector> cols = {{1, 1, 0}, {2, 0, 1}, {0, 0, 0}};
  const IndexCode code(1, 3, FqMatrix::from_columns(f, 3, cols), {{1}, {1}, {2}});
  ASSERT_TRUE(verify_decodable(g, code).decodable());
  expect_normalized(g, code, normalize_unique_columns(g, code));
}

TEST(Normalize, RandomCodesContract) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 600 && checked < 120; ++t) {
    const int N = 2 + static_cast<int>(rng() % 3);
    const int M = 1 + static_cast<int>(rng() % 2);
    const std::uint32_t q = rng() % 2 == 0 ? 2 : 3;
    const auto g = oracle::random_graph(rng, N, 0.5);
    const int ell = M * N - static_cast<int>(rng() % 2);
    const auto code = oracle::random_decodable_code(rng, g, q, M, ell, 40);
    if (!code) {
      continue;
    }
    ++checked;
    const IndexCode pruned = prune_queries(g, *code);
    expect_normalized(g, pruned, normalize_unique_columns(g, pruned));
  }
  EXPECT_GE(checked, 50);
}

TEST(ConverseChecks, CycleScalarTightness) {
  const PrimeField f(2);
  const auto g3 = SideInformationGraph::directed_cycle(3);
  const IndexCode c3 = cycle_scalar_code(3, f, 1);
  const ConverseReport r3 = converse_checks(g3, c3, *verify_decodable(g3, c3).plan);
  const CheckResult* cor = r3.find("corollary1");
  ASSERT_NE(cor, nullptr);
  EXPECT_EQ(cor->subset, (IndexSet{1, 2, 3}));
  EXPECT_EQ(cor->lhs, Rational(4));
  EXPECT_EQ(cor->rhs, Rational(4));
  EXPECT_TRUE(r3.all_hold());

  const auto g4 = SideInformationGraph::directed_cycle(4);
  const IndexCode c4 = cycle_scalar_code(4, f, 1);
  const ConverseReport r4 = converse_checks(g4, c4, *verify_decodable(g4, c4).plan);
  const CheckResult* l1 = r4.find("lemma1");
  ASSERT_NE(l1, nullptr);
  EXPECT_EQ(l1->lhs, Rational(0));
  EXPECT_EQ(l1->slack, Rational(0));
}

TEST(ConverseChecks, UncodedOnDag) {
  const SideInformationGraph dag({{2, 3}, {3}, {}});
  const IndexCode code = uncoded(dag, 1, PrimeField(2));
  const ConverseReport r = converse_checks(dag, code, *verify_decodable(dag, code).plan);
  const CheckResult* l1 = r.find("lemma1");
  ASSERT_NE(l1, nullptr);
  EXPECT_EQ(l1->lhs, Rational(3));
  EXPECT_EQ(l1->rhs, Rational(3));
  EXPECT_EQ(r.find("lemma5"), nullptr); // identity fitting matrix has no null vectors
}

TEST(ConverseChecks, LemmasHoldOnRandomPrunedCodes) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int t = 0; t < 600 && checked < 100; ++t) {
    const int N = 2 + static_cast<int>(rng() % 3);
    const int M = 1 + static_cast<int>(rng() % 2);
    const std::uint32_t q = rng() % 2 == 0 ? 2 : 3;
    const auto g = oracle::random_graph(rng, N, 0.6);
    const auto code = oracle::random_decodable_code(rng, g, q, M, M * N - 1, 40);
    if (!code) {
      continue;
    }
    ++checked;
    const IndexCode pruned = prune_queries(g, *code);
    const ConverseReport r = converse_checks(g, pruned, *verify_decodable(g, pruned).plan);
    for (const CheckResult& c : r.checks) {
      EXPECT_NE(c.status, CheckStatus::Violated) << c.name << "\n" << format_graph(g) << code_to_json(pruned);
    }
    // lemma1 recomputed from the definition
    const auto part = query_partition(pruned);
    const auto p = locality_profile(pruned);
    EXPECT_GE(Rational(static_cast<std::int64_t>(part.unique_all.size())),
              Rational(M) * (Rational(2) * p.rate - Rational(N) * p.average));
  }
  EXPECT_GE(checked, 40);
}
