#include "affcrystal/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

namespace {

void require_same_rank(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("rank mismatch between weight vectors");
}

template <class V>
std::string join(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

WeightVec WeightVec::fundamental(int n, int i) {
  WeightVec w = zero(n);
  w.a[wrap_index(i, n + 1)] = 1;
  return w;
}

int WeightVec::level() const { return std::accumulate(a.begin(), a.end(), 0); }

bool WeightVec::is_dominant() const {
  for (int v : a)
    if (v < 0) return false;
  return true;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  require_same_rank(a.size(), o.a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  delta_coeff += o.delta_coeff;
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  require_same_rank(a.size(), o.a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
  delta_coeff -= o.delta_coeff;
  return *this;
}

WeightVec operator*(int s, WeightVec w) {
  for (int& v : w.a) v *= s;
  w.delta_coeff *= s;
  return w;
}

std::string WeightVec::to_string() const { return join(a); }

RootVector RootVector::simple(int n, int i) {
  RootVector r = zero(n);
  r.k[wrap_index(i, n + 1)] = 1;
  return r;
}

int RootVector::height() const { return std::accumulate(k.begin(), k.end(), 0); }

bool RootVector::is_nonnegative() const {
  for (int v : k)
    if (v < 0) return false;
  return true;
}

bool RootVector::le(const RootVector& o) const {
  require_same_rank(k.size(), o.k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] > o.k[i]) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  require_same_rank(k.size(), o.k.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += o.k[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  require_same_rank(k.size(), o.k.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] -= o.k[i];
  return *this;
}

std::string RootVector::to_string() const { return join(k); }

int pairing(int i, const WeightVec& w) { return w.a.at(wrap_index(i, static_cast<int>(w.size()))); }

WeightVec cl_root(const RootVector& rv) {
  const int size = static_cast<int>(rv.size());
  WeightVec w(std::vector<int>(rv.size(), 0));
  if (size == 1) return w;  // degenerate rank, never used
  for (int i = 0; i < size; ++i) {
    // n = 1 has a double edge: cl(alpha_0) = 2Lambda_0 - 2Lambda_1.
    w.a[i] += 2 * rv.k[i];
    w.a[wrap_index(i - 1, size)] -= rv.k[i];
    w.a[wrap_index(i + 1, size)] -= rv.k[i];
  }
  return w;
}

std::vector<int> decompose(const WeightVec& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("decompose: weight " + lambda.to_string() + " is not dominant");
  std::vector<int> parts;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int m = 0; m < lambda.a[i]; ++m) parts.push_back(static_cast<int>(i));
  return parts;
}

WeightVec compose_weight(int n, const std::vector<int>& parts) {
  WeightVec w = WeightVec::zero(n);
  for (int p : parts) w.a.at(wrap_index(p, n + 1)) += 1;
  return w;
}

WeightVec rotate(const WeightVec& lambda, int dir) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("rotate: direction must be +1 or -1");
  const int size = static_cast<int>(lambda.size());
  WeightVec out(std::vector<int>(lambda.size(), 0));
  for (int i = 0; i < size; ++i) out.a[i] = lambda.a[wrap_index(i + dir, size)];
  return out;
}

}  // namespace affcrystal
