#include "ldic/errors.hpp"
#include "ldic/fq_linalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ldic;

namespace {

FqMatrix random_matrix(std::mt19937_64& rng, const PrimeField& f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Elem> digit(0, f.q() - 1);
  std::vector<Elem> e(rows * cols);
  for (auto& x : e) {
    x = digit(rng);
  }
  return FqMatrix(f, rows, cols, e);
}

} // namespace

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(7));
}

TEST(PrimeField, Inverses) {
  for (std::uint32_t q : {2U, 3U, 5U, 7U, 13U}) {
    const PrimeField f(q);
    for (Elem a = 1; a < q; ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
      EXPECT_EQ(f.add(a, f.neg(a)), 0U);
    }
  }
}

TEST(FqMatrix, RejectsOutOfFieldEntries) {
  EXPECT_THROW(FqMatrix(PrimeField(3), 1, 2, {1, 3}), StructuralError);
  EXPECT_THROW(FqMatrix(PrimeField(3), 2, 2, {1, 2, 0}), StructuralError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(FqMatrix::identity(PrimeField(2), 3)), 3U);
  EXPECT_EQ(rank(FqMatrix(PrimeField(2), 2, 2, {1, 1, 1, 1})), 1U);
  const FqMatrix ex1(PrimeField(2), 4, 3, {1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1});
  EXPECT_EQ(rank(ex1), 3U);
  EXPECT_EQ(oracle::rank(ex1), 3);
}

TEST(NullSpace, Examples) {
  EXPECT_TRUE(null_space_basis(FqMatrix::identity(PrimeField(3), 3)).empty());
  const auto b = null_space_basis(FqMatrix(PrimeField(2), 2, 3, {1, 1, 0, 0, 1, 1}));
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(b[0], (FqVector{1, 1, 1}));
  EXPECT_EQ(null_space_basis(FqMatrix(PrimeField(2), 2, 2)).size(), 2U);
}

TEST(SolveInSpan, Examples) {
  const PrimeField f2(2);
  const std::vector<FqVector> std_basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(solve_in_span(f2, std_basis, {1, 0, 1}), (FqVector{1, 0, 1}));
  const std::vector<FqVector> gens = {{1, 1, 0}, {0, 1, 1}};
  EXPECT_EQ(solve_in_span(f2, gens, {1, 0, 1}), (FqVector{1, 1}));
  const std::vector<FqVector> one = {{1, 0, 0}};
  EXPECT_FALSE(solve_in_span(f2, one, {0, 1, 0}).has_value());
  EXPECT_THROW(solve_in_span(f2, one, {0, 1}), StructuralError);
}

TEST(SolveInSpan, FreeVariablesZero) {
  const PrimeField f(3);
  const std::vector<FqVector> gens = {{1, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(solve_in_span(f, gens, {2, 1}), (FqVector{2, 0, 1}));
}

TEST(Rref, Examples) {
  const FqMatrix id = FqMatrix::identity(PrimeField(5), 3);
  const RowEchelon e = rref(id);
  EXPECT_EQ(e.matrix, id);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1, 2}));

  const RowEchelon r = rref(FqMatrix(PrimeField(3), 2, 2, {0, 1, 0, 2}));
  EXPECT_EQ(r.matrix, FqMatrix(PrimeField(3), 2, 2, {0, 1, 0, 0}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{1}));

  const FqMatrix zero(PrimeField(2), 2, 3);
  EXPECT_EQ(rref(zero).matrix, zero);
  EXPECT_TRUE(rref(zero).pivots.empty());
}

TEST(LinalgProperties, RankNullityAndOracles) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2U, 3U, 5U}) {
    const PrimeField f(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 12;
      const std::size_t cols = 1 + rng() % 12;
      const FqMatrix m = random_matrix(rng, f, rows, cols);
      const auto basis = null_space_basis(m);
      const std::size_t rk = rank(m);
      EXPECT_EQ(rk + basis.size(), cols);
      EXPECT_EQ(rk, rank(m.transpose()));
      EXPECT_EQ(rref(m).pivots.size(), rk);
      EXPECT_EQ(rref(rref(m).matrix).matrix, rref(m).matrix);
      for (const FqVector& b : basis) {
        EXPECT_TRUE(is_zero(m.apply(b)));
      }
      std::uint64_t power = 1;
      for (std::size_t k = 0; k < cols; ++k) {
        power *= q;
      }
      if (power <= 5000 && rows * cols <= 60) {
        EXPECT_EQ(static_cast<int>(rk), oracle::rank(m));
        std::uint64_t kernel = 1;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          kernel *= q;
        }
        EXPECT_EQ(kernel, oracle::kernel_size(m));
      }
    }
  }
}

TEST(LinalgProperties, SolveMatchesEnumeration) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2U, 3U}) {
    const PrimeField f(q);
    std::uniform_int_distribution<Elem> digit(0, q - 1);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const std::size_t count = rng() % 7;
      std::vector<FqVector> gens(count, FqVector(n));
      for (auto& g : gens) {
        for (auto& x : g) {
          x = digit(rng) * (rng() % 3 == 0 ? 0 : 1);
        }
      }
      FqVector target(n);
      for (auto& x : target) {
        x = digit(rng);
      }
      const auto sol = solve_in_span(f, gens, target);
      EXPECT_EQ(sol.has_value(), oracle::in_span(q, gens, target));
      if (sol) {
        EXPECT_EQ(oracle::combine(q, gens, *sol, n), target);
      }
    }
  }
}

TEST(LinalgProperties, PackedRankMatchesGeneric) {
  std::mt19937_64 rng(3);
  const PrimeField f(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 20;
    const std::size_t cols = 1 + rng() % 64;
    const FqMatrix m = random_matrix(rng, f, rows, cols);
    std::vector<std::uint64_t> packed(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (m.at(r, c) != 0) {
          packed[r] |= std::uint64_t{1} << c;
        }
      }
    }
    EXPECT_EQ(gf2::rank_packed(packed), rref(m).pivots.size());
    gf2::PackedBasis basis;
    EchelonBasis generic(f, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      EXPECT_EQ(basis.insert(packed[r]), generic.insert(m.row(r)));
    }
    EXPECT_EQ(basis.dimension(), generic.dimension());
  }
}

TEST(LinalgProperties, WidePackedRankMatchesGeneric) {
  std::mt19937_64 rng(4);
  const PrimeField f(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 65 + rng() % 140;
    const std::size_t k = 1 + rng() % rows;
    const FqMatrix base = random_matrix(rng, f, k, cols);
    std::vector<Elem> e(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t b = 0; b < k; ++b) {
        if (rng() % 2 == 0) {
          continue;
        }
        for (std::size_t c = 0; c < cols; ++c) {
          e[r * cols + c] ^= base.at(b, c);
        }
      }
    }
    const FqMatrix m(f, rows, cols, std::move(e));
    EXPECT_EQ(rank(m), rref(m).pivots.size());
  }
}
