#include "ldic/fq_linalg.hpp"

#include "ldic/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ldic {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("field modulus must be prime, got " + std::to_string(q));
  }
}

Elem PrimeField::inv(Elem a) const {
  if (a % q_ == 0) {
    throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  }
  // Fermat: a^(q-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % q_;
  std::uint64_t e = q_ - 2;
  while (e > 0) {
    if (e & 1U) {
      result = result * base % q_;
    }
    base = base * base % q_;
    e >>= 1U;
  }
  return static_cast<Elem>(result);
}

Elem PrimeField::reduce(std::int64_t value) const noexcept {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = value % q;
  if (r < 0) {
    r += q;
  }
  return static_cast<Elem>(r);
}

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw StructuralError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (Elem e : entries_) {
    if (!field_.contains(e)) {
      throw StructuralError("matrix entry " + std::to_string(e) + " outside F_" +
                            std::to_string(field_.q()));
    }
  }
}

FqMatrix FqMatrix::identity(PrimeField field, std::size_t n) {
  FqMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.entries_[i * n + i] = 1;
  }
  return m;
}

FqMatrix FqMatrix::from_columns(PrimeField field, std::size_t rows, std::span<const FqVector> columns) {
  FqMatrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw StructuralError("column " + std::to_string(c) + " has length " +
                            std::to_string(columns[c].size()) + ", expected " + std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      m.set(r, c, columns[c][r]);
    }
  }
  return m;
}

void FqMatrix::set(std::size_t r, std::size_t c, Elem v) {
  if (!field_.contains(v)) {
    throw StructuralError("entry " + std::to_string(v) + " outside F_" + std::to_string(field_.q()));
  }
  entries_[r * cols_ + c] = v;
}

FqVector FqMatrix::row(std::size_t r) const {
  return FqVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FqVector FqMatrix::column(std::size_t c) const {
  FqVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = at(r, c);
  }
  return v;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.entries_[c * rows_ + r] = at(r, c);
    }
  }
  return t;
}

FqVector FqMatrix::apply(const FqVector& x) const {
  if (x.size() != cols_) {
    throw StructuralError("vector length " + std::to_string(x.size()) + " != cols " + std::to_string(cols_));
  }
  FqVector y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = field_.add(acc, field_.mul(at(r, c), x[c]));
    }
    y[r] = acc;
  }
  return y;
}

FqVector FqMatrix::apply_left(const FqVector& x) const {
  if (x.size() != rows_) {
    throw StructuralError("vector length " + std::to_string(x.size()) + " != rows " + std::to_string(rows_));
  }
  FqVector y(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) {
      continue;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      y[c] = field_.add(y[c], field_.mul(x[r], at(r, c)));
    }
  }
  return y;
}

RowEchelon rref(const FqMatrix& m) {
  const PrimeField& f = m.field();
  std::vector<Elem> a = m.entries();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto at = [&](std::size_t r, std::size_t c) -> Elem& { return a[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && at(p, c) == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    if (p != lead) {
      for (std::size_t k = 0; k < cols; ++k) {
        std::swap(at(p, k), at(lead, k));
      }
    }
    const Elem scale = f.inv(at(lead, c));
    for (std::size_t k = c; k < cols; ++k) {
      at(lead, k) = f.mul(at(lead, k), scale);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || at(r, c) == 0) {
        continue;
      }
      const Elem factor = at(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        at(r, k) = f.sub(at(r, k), f.mul(factor, at(lead, k)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return RowEchelon{FqMatrix(f, rows, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) {
  if (m.field().q() == 2 && m.cols() <= 64) {
    std::vector<std::uint64_t> packed(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) != 0) {
          packed[r] |= std::uint64_t{1} << c;
        }
      }
    }
    return gf2::rank_packed(std::move(packed));
  }
  if (m.field().q() == 2) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> bits(m.rows() * words, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) != 0) {
          bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
        }
      }
    }
    return gf2::rank_packed_wide(std::move(bits), m.rows(), words);
  }
  return rref(m).pivots.size();
}

std::vector<FqVector> null_space_basis(const FqMatrix& m) {
  const RowEchelon echelon = rref(m);
  const PrimeField& f = m.field();
  const std::size_t cols = m.cols();

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : echelon.pivots) {
    is_pivot[p] = true;
  }

  std::vector<FqVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    FqVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
      v[echelon.pivots[r]] = f.neg(echelon.matrix.at(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FqVector> solve_in_span(const PrimeField& field, std::span<const FqVector> generators,
                                      const FqVector& target) {
  const std::size_t n = target.size();
  const std::size_t g = generators.size();
  for (std::size_t k = 0; k < g; ++k) {
    if (generators[k].size() != n) {
      throw StructuralError("generator " + std::to_string(k) + " has length " +
                            std::to_string(generators[k].size()) + ", target has " + std::to_string(n));
    }
  }

  // Augmented system [G | t] with the generators as columns.
  FqMatrix augmented(field, n, g + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < g; ++k) {
      augmented.set(r, k, generators[k][r]);
    }
    augmented.set(r, g, target[r]);
  }
  const RowEchelon echelon = rref(augmented);
  if (!echelon.pivots.empty() && echelon.pivots.back() == g) {
    return std::nullopt;
  }
  FqVector coefficients(g, 0);
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
    coefficients[echelon.pivots[r]] = echelon.matrix.at(r, g);
  }
  return coefficients;
}

EchelonBasis::EchelonBasis(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

FqVector EchelonBasis::reduced(FqVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Elem coeff = v[pivot_[k]];
    if (coeff == 0) {
      continue;
    }
    const FqVector& row = rows_[k];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (row[c] != 0) {
        v[c] = field_.sub(v[c], field_.mul(coeff, row[c]));
      }
    }
  }
  return v;
}

bool EchelonBasis::insert(const FqVector& v) {
  if (v.size() != dim_) {
    throw StructuralError("vector length " + std::to_string(v.size()) + " != " + std::to_string(dim_));
  }
  FqVector r = reduced(v);
  auto lead = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
  if (lead == r.end()) {
    return false;
  }
  const auto pivot = static_cast<std::size_t>(lead - r.begin());
  const Elem scale = field_.inv(r[pivot]);
  for (Elem& e : r) {
    e = field_.mul(e, scale);
  }
  // Keep existing rows reduced against the new pivot so reduction stays single-pass.
  for (FqVector& row : rows_) {
    const Elem coeff = row[pivot];
    if (coeff == 0) {
      continue;
    }
    for (std::size_t c = 0; c < dim_; ++c) {
      row[c] = field_.sub(row[c], field_.mul(coeff, r[c]));
    }
  }
  rows_.push_back(std::move(r));
  pivot_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(const FqVector& v) const {
  if (v.size() != dim_) {
    throw StructuralError("vector length " + std::to_string(v.size()) + " != " + std::to_string(dim_));
  }
  return is_zero(reduced(v));
}

FqVector unit_vector(std::size_t dim, std::size_t index) {
  FqVector v(dim, 0);
  v.at(index) = 1;
  return v;
}

bool is_zero(const FqVector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

} // namespace ldic
