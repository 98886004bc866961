#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gpjac/integer.hpp"

namespace gpjac {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  /// Copy with row `r` and column `c` removed.
  IntegerMatrix without(std::size_t r, std::size_t c) const;
  IntegerMatrix transposed() const;

  bool is_symmetric() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  IntegerMatrix& operator+=(const IntegerMatrix& other);
  IntegerMatrix& operator-=(const IntegerMatrix& other);
  IntegerMatrix& operator*=(const Integer& scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator+(IntegerMatrix lhs, const IntegerMatrix& rhs);
IntegerMatrix operator-(IntegerMatrix lhs, const IntegerMatrix& rhs);
IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs);

/// Finite abelian group Z^free_rank ⊕ Z_{d1} ⊕ ... ⊕ Z_{dm} with d1 | d2 | ... | dm, all di ≥ 2.
struct AbelianGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  /// Canonical form of ⊕ Z_{di} for arbitrary nonnegative di: zeros go to the
  /// free rank, units are dropped, the rest is rewritten as a divisibility chain.
  static AbelianGroup from_cyclic_orders(std::span<const Integer> orders);

  /// Order of the torsion part.
  Integer torsion_order() const;

  /// "Z_5 ⊕ Z_15" (free part rendered as a leading "Z^r ⊕" when present, "0" for the trivial group).
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Exact determinant by fraction-free Gaussian elimination (Bareiss).
Integer det_bareiss(IntegerMatrix m);

/// Diagonal d1 | d2 | ... of the Smith normal form, length min(rows, cols), entries ≥ 0.
std::vector<Integer> smith_normal_form(IntegerMatrix m);

/// Z^rows / im(m) for square m.
AbelianGroup cokernel(const IntegerMatrix& m);

/// m^e by binary exponentiation.
IntegerMatrix mat_pow(const IntegerMatrix& m, unsigned long e);

}  // namespace gpjac
