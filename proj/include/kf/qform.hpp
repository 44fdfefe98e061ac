#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kf/numeric.hpp"

namespace kf {

/// One diagonal entry of a quadratic form, kept in square-class canonical
/// form: sign * squarefree magnitude * product of formal symbols (each with
/// exponent 1; exponents are reduced mod 2 on multiplication).
struct FormEntry {
  int sign = 1;
  Int magnitude = 1;
  std::vector<std::string> symbols;  // sorted, no duplicates

  FormEntry() = default;
  static FormEntry from_rational(const Rat& x);
  static FormEntry from_int(long x) { return from_rational(Rat(x)); }
  static FormEntry symbol(const std::string& name);

  FormEntry operator*(const FormEntry& o) const;
  FormEntry negated() const;
  bool is_symbolic() const { return !symbols.empty(); }
  bool is_one() const { return sign == 1 && magnitude == 1 && symbols.empty(); }
  /// The represented rational (sign * magnitude); throws if symbolic.
  Rat numeric_value() const;

  bool operator==(const FormEntry&) const = default;
  std::strong_ordering operator<=>(const FormEntry& o) const;

  std::string str() const;            // grammar: [-]m[*sym...]
  static FormEntry parse(const std::string& text);
};

/// A diagonal quadratic form over Q extended by formal square-class symbols,
/// plus an explicit count of split-off hyperbolic planes. Normalization
/// sorts the entries and folds every {e, -e} pair into the hyperbolic count,
/// so equal objects are isometric by construction.
class QuadForm {
 public:
  QuadForm() = default;
  explicit QuadForm(std::vector<FormEntry> entries, long hyperbolic = 0);
  static QuadForm hyperbolic_planes(long k) { return QuadForm({}, k); }

  const std::vector<FormEntry>& entries() const { return entries_; }
  long hyperbolic_count() const { return hyperbolic_; }
  long dim() const { return static_cast<long>(entries_.size()) + 2 * hyperbolic_; }
  bool has_symbols() const;
  /// Entries with hyperbolic planes expanded as <1,-1> pairs.
  std::vector<FormEntry> expanded_entries() const;

  /// Witt-equivalent representative of exactly dimension d (pads with or
  /// strips hyperbolic planes); throws if d is unreachable.
  QuadForm forced_dim(long d) const;

  bool operator==(const QuadForm&) const = default;

  std::string str() const;            // grammar: <e1,e2,...> + kH
  static QuadForm parse(const std::string& text);

 private:
  std::vector<FormEntry> entries_;
  long hyperbolic_ = 0;
  void normalize();
};

QuadForm orth_sum(const QuadForm& a, const QuadForm& b);
QuadForm scale(const FormEntry& c, const QuadForm& q);

/// Second exterior power of a purely diagonal form; throws if q has a
/// hyperbolic part.
QuadForm lambda2(const QuadForm& q);

/// The 2^n-dimensional Pfister form <1,g1> x ... x <1,gn>.
QuadForm pfister(const std::vector<FormEntry>& gens);
/// Pure part q0 with pfister(gens) = <1> + q0.
QuadForm pfister_pure(const std::vector<FormEntry>& gens);

/// Killing form of so(q): <-2(dim q - 2)> lambda^2 q. Hyperbolic planes in q
/// are expanded before taking the exterior power. Requires dim q >= 3.
QuadForm killing_of_so(const QuadForm& q);

/// Substitute numeric values for every symbol appearing in q.
QuadForm instantiate(const QuadForm& q, const std::map<std::string, Rat>& values);
FormEntry instantiate(const FormEntry& e, const std::map<std::string, Rat>& values);

/// Hilbert symbol (a,b)_p; p = 0 stands for the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);

/// Hasse invariant of the diagonalized form at p.
int hasse_invariant(const QuadForm& q, const Int& p);

/// (#positive entries) - (#negative entries); throws on symbols.
long signature_numeric(const QuadForm& q);

/// Discriminant as a square class; throws on symbols.
FormEntry discriminant_numeric(const QuadForm& q);

/// Isometry over Q via Hasse-Minkowski (dimension, signature, discriminant,
/// Hasse invariants at all relevant primes). Throws on symbolic entries.
bool isometric_numeric(const QuadForm& a, const QuadForm& b);

/// Symmetric matrix of exact rationals.
struct GramMatrix {
  std::vector<std::vector<Rat>> m;

  GramMatrix() = default;
  explicit GramMatrix(std::vector<std::vector<Rat>> rows);
  size_t size() const { return m.size(); }
  const Rat& operator()(size_t i, size_t j) const { return m[i][j]; }

  bool operator==(const GramMatrix&) const = default;
};

/// Diagonalization by symmetric Gaussian congruence, with entries reduced to
/// square classes and hyperbolic pairs folded. Throws on singular input.
QuadForm diagonalize(const GramMatrix& g);

}  // namespace kf
