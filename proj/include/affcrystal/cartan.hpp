#pragma once

// Affine Cartan datum of type A_n^(1): the index set Z/(n+1), classical
// weights, positive root vectors and the rotations used by the
// fundamental isomorphisms.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace affcrystal {

/// Reduces `i` into [0, size).
inline int wrap_index(int i, int size) {
  const int r = i % size;
  return r < 0 ? r + size : r;
}

/// Classical weight sum_i a_i Lambda_i (+ delta_coeff * delta, always 0 in
/// computed weights).
struct WeightVec {
  std::vector<int> a;
  int delta_coeff = 0;

  WeightVec() = default;
  explicit WeightVec(std::vector<int> coeffs) : a(std::move(coeffs)) {}
  WeightVec(std::initializer_list<int> coeffs) : a(coeffs) {}

  static WeightVec zero(int n) { return WeightVec(std::vector<int>(n + 1, 0)); }
  static WeightVec fundamental(int n, int i);

  int rank() const { return static_cast<int>(a.size()) - 1; }
  std::size_t size() const { return a.size(); }
  int operator[](std::size_t i) const { return a[i]; }
  int& operator[](std::size_t i) { return a[i]; }

  /// Pairing with the canonical central element c = sum h_i.
  int level() const;
  bool is_dominant() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec l, const WeightVec& r) { return l += r; }
  friend WeightVec operator-(WeightVec l, const WeightVec& r) { return l -= r; }
  friend WeightVec operator*(int s, WeightVec w);

  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec&, const WeightVec&) = default;

  std::string to_string() const;
};

/// Element sum_i k_i alpha_i of the root lattice; used with nonnegative
/// entries for dimension vectors.
struct RootVector {
  std::vector<int> k;

  RootVector() = default;
  explicit RootVector(std::vector<int> coeffs) : k(std::move(coeffs)) {}
  RootVector(std::initializer_list<int> coeffs) : k(coeffs) {}

  static RootVector zero(int n) { return RootVector(std::vector<int>(n + 1, 0)); }
  static RootVector simple(int n, int i);

  std::size_t size() const { return k.size(); }
  int operator[](std::size_t i) const { return k[i]; }
  int& operator[](std::size_t i) { return k[i]; }

  int height() const;
  bool is_nonnegative() const;
  /// Componentwise partial order.
  bool le(const RootVector& o) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector l, const RootVector& r) { return l += r; }
  friend RootVector operator-(RootVector l, const RootVector& r) { return l -= r; }

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string to_string() const;
};

/// <h_i, w>.
int pairing(int i, const WeightVec& w);

/// Classical projection sum_i k_i cl(alpha_i), cl(alpha_i) = 2 Lambda_i -
/// Lambda_{i-1} - Lambda_{i+1}. Vanishes exactly on multiples of delta.
WeightVec cl_root(const RootVector& rv);

/// Multiset i_1 <= ... <= i_l with Lambda = sum Lambda_{i_k}.
/// Throws std::invalid_argument for non-dominant input.
std::vector<int> decompose(const WeightVec& lambda);

/// Inverse of decompose.
WeightVec compose_weight(int n, const std::vector<int>& parts);

/// dir = +1: a'_i = a_{i+1}; dir = -1: a''_i = a_{i-1}.
WeightVec rotate(const WeightVec& lambda, int dir);

}  // namespace affcrystal
