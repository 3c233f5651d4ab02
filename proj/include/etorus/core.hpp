#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace etorus {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// Family/rank combination outside the supported classical range.
class InvalidTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (group order, grid size, coset count) would be exceeded.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Internal consistency check failed (bad barycentric data, table mismatch, overflow).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Vectors or files tagged for different grids were combined.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw InvariantError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

/// Non-negative remainder.
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b);

/// Dense row-major integer matrix. Ranks here are small, so no expression templates.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Int operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::span<const Int> row(int i) const { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
  IntVector column(int j) const;
  const IntVector& data() const { return data_; }

  IntMatrix transposed() const;
  IntMatrix scaled(Int factor) const;
  IntVector apply(std::span<const Int> v) const;
  /// Row vector times matrix: (vᵀ A)ᵀ.
  IntVector apply_left(std::span<const Int> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.data_ <=> b.data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  IntVector data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);
/// det(A)·A⁻¹, computed from cofactors.
IntMatrix adjugate(const IntMatrix& a);

Int dot(std::span<const Int> a, std::span<const Int> b);

std::string to_string(std::span<const Int> v);

}  // namespace etorus
