#pragma once

// Exact linear algebra over prime fields F_q.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ldic {

using Elem = std::uint32_t;
using FqVector = std::vector<Elem>;

/// Arithmetic modulo a prime q. Construction rejects composite moduli.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= q_ ? s - q_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : static_cast<Elem>(q_ - (b - a)); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % q_);
  }
  /// Multiplicative inverse; `a` must be nonzero.
  Elem inv(Elem a) const;
  /// Maps any integer (including negatives) into [0, q).
  Elem reduce(std::int64_t value) const noexcept;

  bool contains(Elem a) const noexcept { return a < q_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over a prime field.
class FqMatrix {
public:
  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Throws StructuralError if entries.size() != rows*cols or an entry is >= q.
  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static FqMatrix identity(PrimeField field, std::size_t n);
  /// Builds a rows x columns.size() matrix whose k-th column is columns[k].
  static FqMatrix from_columns(PrimeField field, std::size_t rows, std::span<const FqVector> columns);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v);

  FqVector row(std::size_t r) const;
  FqVector column(std::size_t c) const;
  FqMatrix transpose() const;

  /// m * x, with x of length cols().
  FqVector apply(const FqVector& x) const;
  /// x^T * m, with x of length rows().
  FqVector apply_left(const FqVector& x) const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RowEchelon {
  FqMatrix matrix;
  std::vector<std::size_t> pivots; // pivot column per nonzero row, ascending
};

/// Reduced row-echelon form. Pivots are normalized to 1 and cleared above and below.
RowEchelon rref(const FqMatrix& m);

/// Column-space dimension. Uses a bit-packed path when q == 2 and cols <= 64.
std::size_t rank(const FqMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column of rref(m), in ascending free-column order.
std::vector<FqVector> null_space_basis(const FqMatrix& m);

/// Coefficients c with sum_k c_k * generators[k] == target, or nullopt if target is outside the span.
/// Free variables are set to zero, so the answer is deterministic.
/// Throws StructuralError if the vectors do not all have the same length.
std::optional<FqVector> solve_in_span(const PrimeField& field, std::span<const FqVector> generators,
                                      const FqVector& target);

/// Incrementally maintained echelon basis of a subspace of F_q^n.
class EchelonBasis {
public:
  EchelonBasis(PrimeField field, std::size_t dim);

  /// Adds v to the spanning set. Returns true iff the dimension grew.
  bool insert(const FqVector& v);
  /// True iff v lies in the current span.
  bool contains(const FqVector& v) const;

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ambient_dimension() const noexcept { return dim_; }

private:
  FqVector reduced(FqVector v) const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<FqVector> rows_;        // pivot entry of rows_[k] is 1 at pivot_[k]
  std::vector<std::size_t> pivot_;
};

FqVector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(const FqVector& v) noexcept;

namespace gf2 {

/// Rank of a GF(2) matrix whose rows are packed into 64-bit words (bit c = column c).
std::size_t rank_packed(std::vector<std::uint64_t> rows);

/// Rank of a GF(2) matrix with rows packed into `words` 64-bit words each, row-major.
std::size_t rank_packed_wide(std::vector<std::uint64_t> bits, std::size_t rows, std::size_t words);

/// Echelon basis over GF(2) for vectors of at most 64 coordinates.
class PackedBasis {
public:
  bool insert(std::uint64_t v);
  bool contains(std::uint64_t v) const noexcept { return reduce(v) == 0; }
  std::size_t dimension() const noexcept { return count_; }

private:
  std::uint64_t reduce(std::uint64_t v) const noexcept;

  std::uint64_t by_pivot_[64] = {}; // by_pivot_[b] has highest set bit b, or 0
  std::size_t count_ = 0;
};

} // namespace gf2

} // namespace ldic
