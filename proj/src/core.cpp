#include "etorus/core.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace etorus {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(int j) const {
  IntVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::scaled(Int factor) const {
  IntMatrix m = *this;
  for (Int& v : m.data_) v = checked::mul(v, factor);
  return m;
}

IntVector IntMatrix::apply(std::span<const Int> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  IntVector out(rows_, 0);
  for (int i = 0; i < rows_; ++i) out[i] = dot(row(i), v);
  return out;
}

IntVector IntMatrix::apply_left(std::span<const Int> v) const {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("vector-matrix size mismatch");
  IntVector out(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols_; ++j) out[j] = checked::add(out[j], checked::mul(v[i], (*this)(i, j)));
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
    }
  return c;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

Int determinant(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = checked::sub(checked::mul(m(i, j), m(k, k)), checked::mul(m(i, k), m(k, j))) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      const Int cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
      adj(j, i) = cof;
    }
  return adj;
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace etorus
