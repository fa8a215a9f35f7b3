#include "toricfano/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace toricfano {

using namespace checked;

Int gcd(Int a, Int b) {
  a = a < 0 ? neg(a) : a;
  b = b < 0 ? neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  if (b == -1) return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("ceil_div by zero");
  if (b == -1) return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {add(a[0], b[0]), add(a[1], b[1]), add(a[2], b[2])}; }
Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {sub(a[0], b[0]), sub(a[1], b[1]), sub(a[2], b[2])}; }
Vec3 operator*(Int s, const Vec3 &a) { return {mul(s, a[0]), mul(s, a[1]), mul(s, a[2])}; }
Vec2 operator+(const Vec2 &a, const Vec2 &b) { return {add(a[0], b[0]), add(a[1], b[1])}; }
Vec2 operator-(const Vec2 &a, const Vec2 &b) { return {sub(a[0], b[0]), sub(a[1], b[1])}; }
Vec2 operator*(Int s, const Vec2 &a) { return {mul(s, a[0]), mul(s, a[1])}; }

Int dot(const Vec3 &a, const Vec3 &b) {
  return add(add(mul(a[0], b[0]), mul(a[1], b[1])), mul(a[2], b[2]));
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {sub(mul(a[1], b[2]), mul(a[2], b[1])),
          sub(mul(a[2], b[0]), mul(a[0], b[2])),
          sub(mul(a[0], b[1]), mul(a[1], b[0]))};
}

Int cross(const Vec2 &a, const Vec2 &b) { return sub(mul(a[0], b[1]), mul(a[1], b[0])); }

Int content(const Vec3 &v) { return gcd(gcd(v[0], v[1]), v[2]); }
Int content(const Vec2 &v) { return gcd(v[0], v[1]); }

Vec3 primitive_part(const Vec3 &v) {
  const Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive_part of the zero vector");
  return {v[0] / g, v[1] / g, v[2] / g};
}

Vec2 primitive_part(const Vec2 &v) {
  const Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive_part of the zero vector");
  return {v[0] / g, v[1] / g};
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const Vec3> rows) {
  IntMatrix m(rows.size(), 3);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = rows[i][j];
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = add((*this)(dst, j), mul(k, (*this)(src, j)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = add((*this)(i, dst), mul(k, (*this)(i, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = neg((*this)(r, j));
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = add(out(i, j), mul(aik, b(k, j)));
    }
  return out;
}

Int determinant(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = sub(mul(a(i, j), a(k, k)), mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return mul(sign, a(n - 1, n - 1));
}

Int det3(const Vec3 &a, const Vec3 &b, const Vec3 &c) { return dot(a, cross(b, c)); }

Int det3(const IntMatrix &m) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("det3: expected a 3x3 matrix");
  return det3(Vec3{m(0, 0), m(0, 1), m(0, 2)}, Vec3{m(1, 0), m(1, 1), m(1, 2)},
              Vec3{m(2, 0), m(2, 1), m(2, 2)});
}

IntMatrix unimodular_inverse(const IntMatrix &m) {
  const Int d = determinant(m);
  if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = d;
    return inv;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Int cof = ((i + j) % 2 == 0) ? determinant(minor) : neg(determinant(minor));
      inv(j, i) = mul(cof, d); // adj / d with d = +-1
    }
  return inv;
}

bool is_primitive(const Vec3 &v) {
  const Int g = content(v);
  if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
  return g == 1;
}

bool is_primitive(const Vec2 &v) {
  const Int g = content(v);
  if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
  return g == 1;
}

// ---------------------------------------------------------------------------
// Smith normal form by row/column gcd reduction.

SmithForm smith_normal_form(const IntMatrix &m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(r);
  IntMatrix right = IntMatrix::identity(c);
  const std::size_t k = std::min(r, c);

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      Int best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int v = a(i, j) < 0 ? neg(a(i, j)) : a(i, j);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done; // trailing block is zero

      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const Int q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, neg(q));
        left.add_row_multiple(i, t, neg(q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const Int q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, neg(q));
        right.add_col_multiple(j, t, neg(q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }
done:
  SmithForm out;
  out.diagonal.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal[t] = a(t, t);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

bool extends_to_basis(const IntMatrix &vs) {
  if (vs.rows() == 0) throw std::invalid_argument("extends_to_basis: no vectors");
  if (vs.rows() > vs.cols()) throw std::invalid_argument("extends_to_basis: more vectors than the rank");
  const auto snf = smith_normal_form(vs);
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](Int d) { return d == 1; });
}

bool extends_to_basis(std::span<const Vec3> vs) { return extends_to_basis(IntMatrix::from_rows(vs)); }

std::optional<Vec3> solve_height_one(const Vec3 &v1, const Vec3 &v2) {
  // A w = (1, 1) with A = [v1; v2]. With L A R = D, substitute w = R y.
  const IntMatrix a = IntMatrix::from_rows(std::array{v1, v2});
  const auto snf = smith_normal_form(a);
  const Int lb[2] = {add(snf.left(0, 0), snf.left(0, 1)), add(snf.left(1, 0), snf.left(1, 1))};
  Int y[3] = {0, 0, 0};
  for (std::size_t i = 0; i < 2; ++i) {
    const Int d = snf.diagonal[i];
    if (d == 0) {
      if (lb[i] != 0) return std::nullopt;
    } else {
      if (lb[i] % d != 0) return std::nullopt;
      y[i] = lb[i] / d;
    }
  }
  Vec3 w{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w[i] = add(w[i], mul(snf.right(i, j), y[j]));
  return w;
}

} // namespace toricfano
