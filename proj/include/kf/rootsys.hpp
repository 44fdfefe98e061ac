#pragma once

#include <map>
#include <string>
#include <vector>

#include "kf/numeric.hpp"

namespace kf {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

/// A root in simple-root coordinates. Vertex i of the diagram (1-based, the
/// E6/E7 numbering with vertex 2 on the branch) owns coefficient coeffs[i-1].
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
  std::string str() const;  // e.g. "a1+2a3"
};

struct CoweightElement {
  int vertex = 0;          // j, 1-based
  Int c;                   // connection index
  std::vector<Int> coeffs; // c * coweight_j over simple coroots
};

struct ShapeBucket {
  std::vector<int> shape;      // coefficients outside J (zero on J)
  std::vector<Root> roots;     // sorted by (height, lex)
  Root minimal;                // unique root of minimal height in the bucket
};

struct Grading {
  std::vector<int> J;                       // sorted vertex subset
  std::map<int, std::vector<ShapeBucket>> levels;  // level >= 1
  long level0_count = 0;
};

struct Component {
  Family family;
  int rank;
  std::vector<int> vertices;  // ambient labels; position i is local vertex i+1
                              // in the standard numbering of the family
};

/// Simple root datum with exact Cartan data and a deterministic positive
/// root enumeration (by height, then lexicographic).
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);
  static RootSystem build(const std::string& name);  // "E6", "D4", ...

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  /// cartan()[i][j] = <alpha_j+1, coroot of alpha_i+1>
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Half squared length of alpha_i (long roots normalized to 1).
  const std::vector<Rat>& root_length_data() const { return d_; }
  bool simply_laced() const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }
  bool is_root(const std::vector<int>& coeffs) const;
  long dim() const { return rank_ + 2 * static_cast<long>(positive_.size()); }

  int coxeter_number() const;
  int dual_coxeter_number() const;
  Int connection_index() const;  // det of the Cartan matrix

  /// <beta, coroot of alpha_i> for each i.
  std::vector<int> coroot_pairing(const Root& beta) const;
  /// (beta, beta)/2 in the normalization where long simple roots have 1.
  Rat half_norm(const Root& beta) const;

  CoweightElement coweight(int vertex) const;

  bool operator==(const RootSystem&) const = default;

 private:
  Family family_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> d_;
  std::vector<Root> positive_;

  void enumerate_roots();
};

Grading grade(const RootSystem& rs, const std::vector<int>& J);

/// Weyl dimension formula over the subsystem spanned by J, with the highest
/// weight given over the fundamental weights at the vertices of J (ambient
/// labels, sorted order). Pass all vertices for a standalone system.
Int weyl_dim(const RootSystem& rs, const std::vector<int>& J, const std::vector<Rat>& hw);
Int weyl_dim(const RootSystem& rs, const std::vector<Rat>& hw);

/// Highest weight of the irreducible piece attached to a shape: the negative
/// of its minimal-height root, restricted to the J-subsystem. Coordinates
/// follow sorted J. Throws unless root is minimal in its shape.
std::vector<Rat> restrict_weight(const RootSystem& rs, const std::vector<int>& J,
                                 const Root& root);

std::vector<Component> subsystem_components(const RootSystem& rs,
                                            const std::vector<int>& vertices);

/// Positive roots supported on the given vertex subset.
std::vector<Root> positive_roots_supported(const RootSystem& rs,
                                           const std::vector<int>& vertices);

long component_dim(const RootSystem& rs, const Component& c);

}  // namespace kf
