#pragma once

// Exact dense linear algebra over Q (GMP rationals) and over F_p with
// p = 2^31 - 1, plus block maps graded by I = Z/(n+1).

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "affcrystal/cartan.hpp"

namespace affcrystal {

/// Residue modulo the Mersenne prime 2^31 - 1.
struct Fp {
  static constexpr std::uint64_t P = 2147483647ULL;
  std::uint32_t v = 0;

  Fp() = default;
  Fp(long long x) {  // NOLINT(google-explicit-constructor)
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += static_cast<long long>(P);
    v = static_cast<std::uint32_t>(r);
  }
  static Fp raw(std::uint64_t x) {
    Fp f;
    f.v = static_cast<std::uint32_t>(x % P);
    return f;
  }

  friend Fp operator+(Fp a, Fp b) { return raw(std::uint64_t(a.v) + b.v); }
  friend Fp operator-(Fp a, Fp b) { return raw(std::uint64_t(a.v) + P - b.v); }
  friend Fp operator*(Fp a, Fp b) { return raw(std::uint64_t(a.v) * b.v); }
  Fp operator-() const { return raw(P - v); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }

  Fp pow(std::uint64_t e) const;
  Fp inverse() const;
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class inverse(const mpq_class& x) {
  if (sgn(x) == 0) throw std::domain_error("inverse of zero");
  return mpq_class(1) / x;
}

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

using MatFp = Matrix<Fp>;
using MatQ = Matrix<mpq_class>;

/// Gaussian elimination to reduced row echelon form in place; returns the
/// pivot columns. Pivot = first nonzero entry in column order.
template <class F>
std::vector<int> rref(Matrix<F>& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const F inv = inverse(a(r, c));
    for (int j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const F f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const MatFp& a);
/// Fraction-free (Bareiss) elimination after clearing row denominators.
int rank(const MatQ& a);

template <class F>
int nullity(const Matrix<F>& a) {
  return a.cols() - rank(a);
}

/// Basis of {v : a v = 0}, one vector per free column of the RREF.
template <class F>
std::vector<std::vector<F>> nullspace_basis(const Matrix<F>& a) {
  Matrix<F> r = a;
  const auto pivots = rref(r);
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(a.cols(), F(0));
    v[free] = F(1);
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(static_cast<int>(row), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatQ to_rational(const MatFp& a);  // entries read as integers in [0, p)
MatFp reduce_mod_p(const MatQ& a);  // throws if a denominator vanishes mod p

/// Block map of degree d on V(alpha) = sum_i V_i: block i sends V_{i-d} to
/// V_i, indices mod n+1.
template <class F>
struct GradedMap {
  int n = 1;
  RootVector dims;
  int degree = 0;
  std::vector<Matrix<F>> blocks;

  static GradedMap zero(const RootVector& alpha, int degree) {
    GradedMap g;
    g.n = static_cast<int>(alpha.size()) - 1;
    g.dims = alpha;
    g.degree = degree;
    for (int i = 0; i <= g.n; ++i) g.blocks.emplace_back(alpha[i], alpha[g.source(i)]);
    return g;
  }
  static GradedMap identity(const RootVector& alpha) {
    GradedMap g = zero(alpha, 0);
    for (int i = 0; i <= g.n; ++i) g.blocks[i] = Matrix<F>::identity(alpha[i]);
    return g;
  }

  /// Source component of block i.
  int source(int i) const { return wrap_index(i - degree, n + 1); }
  /// Block that leaves component s.
  const Matrix<F>& block_from(int s) const { return blocks[wrap_index(s + degree, n + 1)]; }

  bool is_zero_map() const {
    for (const auto& b : blocks)
      if (!b.is_zero_matrix()) return false;
    return true;
  }

  /// Offsets of each component in the dense ordering (component 0 first).
  std::vector<int> offsets() const {
    std::vector<int> off{0};
    for (int i = 0; i <= n; ++i) off.push_back(off.back() + dims[i]);
    return off;
  }

  Matrix<F> dense() const {
    const auto off = offsets();
    Matrix<F> m(off.back(), off.back());
    for (int i = 0; i <= n; ++i) {
      const int s = source(i);
      for (int r = 0; r < dims[i]; ++r)
        for (int c = 0; c < dims[s]; ++c) m(off[i] + r, off[s] + c) = blocks[i](r, c);
    }
    return m;
  }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.dims == b.dims && wrap_index(a.degree, a.n + 1) == wrap_index(b.degree, b.n + 1) && a.blocks == b.blocks;
  }
};

/// a after b; degrees add.
template <class F>
GradedMap<F> compose(const GradedMap<F>& a, const GradedMap<F>& b) {
  if (a.dims != b.dims) throw std::invalid_argument("compose: graded dimensions differ");
  GradedMap<F> out;
  out.n = a.n;
  out.dims = a.dims;
  out.degree = a.degree + b.degree;  // only the residue mod n+1 matters
  for (int i = 0; i <= a.n; ++i) {
    // a_i : V_{i - da} -> V_i after b_{i - da} : V_{i - da - db} -> V_{i - da}
    out.blocks.push_back(a.blocks[i] * b.blocks[wrap_index(i - a.degree, a.n + 1)]);
  }
  return out;
}

template <class F>
GradedMap<F> power(const GradedMap<F>& m, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  if (k == 0) return GradedMap<F>::identity(m.dims);
  GradedMap<F> out = m;
  for (int e = 1; e < k; ++e) out = compose(out, m);
  return out;
}

template <class F>
GradedMap<F> commutator(const GradedMap<F>& a, const GradedMap<F>& b) {
  const auto ab = compose(a, b);
  const auto ba = compose(b, a);
  GradedMap<F> out = ab;
  for (int i = 0; i <= a.n; ++i) out.blocks[i] = ab.blocks[i] - ba.blocks[i];
  return out;
}

/// dim ker(m) restricted to each V_s.
template <class F>
RootVector kernel_dims(const GradedMap<F>& m) {
  RootVector r = RootVector::zero(m.n);
  for (int s = 0; s <= m.n; ++s) r.k[s] = m.dims[s] - (m.dims[s] ? rank(m.block_from(s)) : 0);
  return r;
}

}  // namespace affcrystal
