#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace kf {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Sign of a rational as -1, 0, +1.
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

/// Squarefree part of a nonzero integer: the unique squarefree s with
/// |x| = s * k^2. Sign is dropped; the caller tracks it separately.
Int squarefree_part(const Int& x);

/// Prime factors of a nonzero integer, each listed once, ascending.
std::vector<Int> prime_factors(const Int& x);

/// Legendre symbol (a|p) for odd prime p.
int legendre(const Int& a, const Int& p);

/// Exact determinant of a square rational matrix.
Rat det(std::vector<std::vector<Rat>> m);

/// Solve m * x = rhs exactly; throws on singular m.
std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs);

}  // namespace kf
