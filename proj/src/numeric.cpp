#include "kf/numeric.hpp"

#include <algorithm>
#include <map>

namespace kf {

namespace {

// Pollard rho (Brent variant) for the rare residual that survives trial
// division. Input is odd, composite, not a perfect power of interest.
Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xB5297A4Dul);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = y, d = 1, q = 1, ys = y;
    const long m = 128;
    long r = 1;
    while (d == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && d == 1) {
        ys = y;
        for (long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        Int diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned long>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (Int p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<Int, unsigned long> sub;
    factor_into(r, sub);
    for (auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Int squarefree_part(const Int& x) {
  if (x == 0) throw error("squarefree_part of zero");
  std::map<Int, unsigned long> f;
  factor_into(x, f);
  Int s = 1;
  for (auto& [p, e] : f)
    if (e % 2) s *= p;
  return s;
}

std::vector<Int> prime_factors(const Int& x) {
  if (x == 0) throw error("prime_factors of zero");
  std::map<Int, unsigned long> f;
  factor_into(x, f);
  std::vector<Int> ps;
  for (auto& [p, e] : f) ps.push_back(p);
  return ps;
}

int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Rat det(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  Rat result = 1;
  for (size_t i = 0; i < n; ++i) {
    size_t piv = i;
    while (piv < n && m[piv][i] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != i) {
      std::swap(m[piv], m[i]);
      result = -result;
    }
    result *= m[i][i];
    for (size_t j = i + 1; j < n; ++j) {
      if (m[j][i] == 0) continue;
      Rat f = m[j][i] / m[i][i];
      for (size_t k = i; k < n; ++k) m[j][k] -= f * m[i][k];
    }
  }
  return result;
}

std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    size_t piv = i;
    while (piv < n && m[piv][i] == 0) ++piv;
    if (piv == n) throw error("solve: singular matrix");
    std::swap(m[piv], m[i]);
    std::swap(rhs[piv], rhs[i]);
    for (size_t j = 0; j < n; ++j) {
      if (j == i || m[j][i] == 0) continue;
      Rat f = m[j][i] / m[i][i];
      for (size_t k = i; k < n; ++k) m[j][k] -= f * m[i][k];
      rhs[j] -= f * rhs[i];
    }
  }
  for (size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace kf
