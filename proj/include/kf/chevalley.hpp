#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "kf/qform.hpp"
#include "kf/rootsys.hpp"

namespace kf {

using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;
using SparseVec = std::map<int, Rat>;

/// Split Chevalley basis with exact integer structure constants, built by
/// the extraspecial-pair method over the deterministic root order from
/// RootSystem. Basis order: h_{alpha_1..r}, x_beta for beta in Phi+, then
/// x_{-beta} in the same order.
class ChevalleyAlgebra {
 public:
  static ChevalleyAlgebra build(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  long dim() const { return rs_.rank() + 2 * static_cast<long>(positives_); }
  long positive_count() const { return positives_; }

  /// N_{u,v} for roots u, v (coefficient vectors, either sign); 0 when u+v
  /// is not a root.
  int structure_constant(const std::vector<int>& u, const std::vector<int>& v) const;

  /// Bracket of two basis elements, sparse over the basis.
  SparseVec bracket_basis(int a, int b) const;
  SparseVec bracket(const SparseVec& v, const SparseVec& w) const;

  /// Basis vector for sum of t_i h_{alpha_i}.
  Vec torus_element(const std::vector<Rat>& t) const;
  Vec torus_element(const CoweightElement& cw) const;
  Vec basis_vector(int index) const;

  Mat adjoint(const Vec& v) const;
  Rat trace_form(const Vec& v, const Vec& w) const;

  /// Gram matrix of the trace form on {h_{alpha_i}}.
  GramMatrix killing_gram_split() const;

  bool jacobi_holds(int a, int b, int c) const;
  void check_jacobi_exhaustive() const;          // throws on failure
  void check_jacobi_sampled(std::mt19937_64& rng, long trials) const;

 private:
  RootSystem rs_;
  long positives_ = 0;
  std::vector<Root> roots_;                      // positives then negatives
  std::map<std::vector<int>, int> index_;        // coeffs -> root index
  std::vector<std::vector<int16_t>> n_;          // full structure constant table
  std::vector<Rat> norm_;                        // (alpha, alpha) per root
  std::vector<std::vector<Int>> coroot_;         // h_alpha over h_{alpha_i}

  explicit ChevalleyAlgebra(const RootSystem& rs) : rs_(rs) {}
  int root_index(const std::vector<int>& coeffs) const;  // -1 if absent
  int pairing(int root, int i) const;            // <root, coroot of alpha_i+1>
};

inline ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  return ChevalleyAlgebra::build(rs);
}

}  // namespace kf
