#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricfano {

using Int = std::int64_t;
using Vec2 = std::array<Int, 2>;
using Vec3 = std::array<Int, 3>;

/// Raised whenever a fixed-width integer operation would wrap. Every
/// arithmetic step in the library goes through the checked helpers below, so
/// results are either exact or the computation is abandoned.
class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string &what) : std::overflow_error(what) {}
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

} // namespace checked

Int gcd(Int a, Int b);

/// Floor and ceiling of a / b for b != 0 (rounding toward -inf / +inf).
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

Vec3 operator+(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a, const Vec3 &b);
Vec3 operator*(Int s, const Vec3 &a);
Vec2 operator+(const Vec2 &a, const Vec2 &b);
Vec2 operator-(const Vec2 &a, const Vec2 &b);
Vec2 operator*(Int s, const Vec2 &a);

Int dot(const Vec3 &a, const Vec3 &b);
Vec3 cross(const Vec3 &a, const Vec3 &b);
/// z-component of the planar cross product.
Int cross(const Vec2 &a, const Vec2 &b);

Int content(const Vec3 &v);
Int content(const Vec2 &v);
/// v divided by the gcd of its entries; v must be nonzero.
Vec3 primitive_part(const Vec3 &v);
Vec2 primitive_part(const Vec2 &v);

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const Vec3> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Int &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix &m);
Int det3(const IntMatrix &m);
Int det3(const Vec3 &a, const Vec3 &b, const Vec3 &c);

/// Inverse of a unimodular matrix (determinant +-1) via the adjugate.
IntMatrix unimodular_inverse(const IntMatrix &m);

bool is_primitive(const Vec3 &v);
bool is_primitive(const Vec2 &v);

struct SmithForm {
  /// d_1 | d_2 | ... , length min(rows, cols), all nonnegative.
  std::vector<Int> diagonal;
  IntMatrix left;  ///< unimodular, rows x rows
  IntMatrix right; ///< unimodular, cols x cols
};

/// left * m * right is the diagonal matrix with entries `diagonal`.
SmithForm smith_normal_form(const IntMatrix &m);

/// True iff the rows of `vs` can be completed to a Z-basis of Z^n
/// (n = number of columns). Requires 1 <= rows <= n.
bool extends_to_basis(const IntMatrix &vs);
bool extends_to_basis(std::span<const Vec3> vs);

/// Some integral w with <w, v1> = <w, v2> = 1, if one exists.
std::optional<Vec3> solve_height_one(const Vec3 &v1, const Vec3 &v2);

} // namespace toricfano
