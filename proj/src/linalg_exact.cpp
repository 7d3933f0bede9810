#include "affcrystal/linalg_exact.hpp"

#include <utility>

namespace affcrystal {

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this, acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(P - 2);
}

int rank(const MatFp& a) {
  MatFp r = a;
  return static_cast<int>(rref(r).size());
}

int rank(const MatQ& a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (int j = 0; j < cols; ++j) m[i][j] = a(i, j).get_num() * (den / a(i, j).get_den());
  }
  // Bareiss: every division below is exact.
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

MatQ to_rational(const MatFp& a) {
  MatQ out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = mpq_class(static_cast<unsigned long>(a(i, j).v));
  return out;
}

MatFp reduce_mod_p(const MatQ& a) {
  const mpz_class p = static_cast<unsigned long>(Fp::P);
  MatFp out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      mpz_class num = a(i, j).get_num() % p;
      mpz_class den = a(i, j).get_den() % p;
      if (num < 0) num += p;
      if (den == 0) throw std::domain_error("reduce_mod_p: denominator divisible by p");
      out(i, j) = Fp(static_cast<long long>(num.get_si())) * Fp(static_cast<long long>(den.get_si())).inverse();
    }
  return out;
}

}  // namespace affcrystal
