#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kf/qform.hpp"
#include "kf/rootsys.hpp"

namespace kf {

enum class TorusKind { Single, OrbitSum, OrbitDiff };

struct TorusBasisElement {
  TorusKind kind = TorusKind::Single;
  std::vector<CoweightElement> coweights;  // one or two
  bool carries_sqrt_a = false;             // true only for OrbitDiff
};

/// A Tits index: Dynkin diagram plus *-orbit partition, circled orbits and
/// the quadratic extension parameter a for type-2 indices. Orbits of size 3
/// (trialitarian D4) are rejected by validate().
struct TitsIndex {
  RootSystem rs;
  std::vector<std::vector<int>> orbits;  // partition of vertices, each sorted
  std::vector<size_t> circled;           // orbit positions, sorted
  std::optional<FormEntry> extension_param;

  /// Convenience constructor for inner indices (all orbits singletons).
  static TitsIndex inner(const RootSystem& rs, const std::vector<int>& circled_vertices);
  static TitsIndex outer(const RootSystem& rs, std::vector<std::vector<int>> orbits,
                         const std::vector<std::vector<int>>& circled_orbits,
                         const FormEntry& a);

  bool is_inner() const;
  bool vertex_circled(int v) const;
  std::vector<int> circled_vertices() const;
  std::vector<int> anisotropic_vertices() const;  // Delta_0
  const std::vector<int>* orbit_of(int v) const;
};

/// Structural validation; returns human-readable violations (empty when ok).
/// Admissibility against the classification tables is deliberately not
/// checked.
std::vector<std::string> validate(const TitsIndex& idx);
void validate_or_throw(const TitsIndex& idx);

/// Basis of a maximal F-split toral subalgebra read off the index: one
/// single per circled singleton orbit, a sum/diff pair per circled 2-orbit.
std::vector<TorusBasisElement> split_torus_basis(const TitsIndex& idx);

/// Basis of Z_H(A) for the regular subalgebra with simple roots delta_prime.
/// Requires delta_prime to contain the anisotropic kernel and to be stable
/// under the *-action.
std::vector<TorusBasisElement> centralizer_basis(const TitsIndex& idx,
                                                 const std::vector<int>& delta_prime);

struct AnisotropicKernel {
  std::vector<Component> components;
  long dim = 0;
};

AnisotropicKernel anisotropic_kernel(const TitsIndex& idx);

}  // namespace kf
