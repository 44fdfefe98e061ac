#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kf/qform.hpp"
#include "kf/rootsys.hpp"
#include "kf/titsidx.hpp"

namespace kf {

/// Gram matrix of the Killing form on {h_{c lambda_i} | i in Delta \ Delta'},
/// by direct summation of coefficient products over the positive roots.
GramMatrix gram_zha_coeffs(const RootSystem& rs, const std::vector<int>& delta_prime,
                           const Int& c);

/// The same matrix through the representation-theoretic route: level/shape
/// grading, restriction of minimal-height roots, Weyl dimension formula.
GramMatrix gram_zha_reps(const RootSystem& rs, const std::vector<int>& delta_prime,
                         const Int& c);

/// Killing form on the 2-dimensional toral subalgebra of a circled 2-orbit:
/// <2(x+y), 2a(x-y)> with x = kappa(h_i,h_i), y = kappa(h_i,h_j).
/// Requires x > y > 0.
QuadForm orbit_form(const Rat& x, const Rat& y, const FormEntry& a);

/// The square class <m(L)/m(A_i)> (dual Coxeter numbers and the root-length
/// correction when lengths differ).
FormEntry component_scalar(const RootSystem& ambient, const Component& comp);

/// Killing form of the split algebra of the given type: diagonalized Cartan
/// Gram plus one hyperbolic plane per positive root.
QuadForm split_killing_form(const RootSystem& rs);
/// Gram of the Killing form on the Cartan subalgebra (2 m* normalization).
GramMatrix split_cartan_gram(const RootSystem& rs);

struct SubalgebraSpec {
  std::vector<int> delta_prime;
  std::vector<QuadForm> kappas;  // one per connected component of delta_prime,
                                 // ordered by smallest ambient vertex
};

struct AssemblyTerm {
  std::string label;
  FormEntry scalar;  // multiplier already applied to form
  QuadForm form;
};

struct KillingFormResult {
  QuadForm total;
  std::vector<AssemblyTerm> terms;
  long hyperbolic = 0;
};

KillingFormResult assemble(const TitsIndex& idx, const SubalgebraSpec& spec);

/// Signature over R read off the index: (# circled single vertices) minus
/// the dimension of the anisotropic kernel.
long real_signature(const TitsIndex& idx);

// ---------------------------------------------------------------------------
// closed-form catalog

enum class CatalogCase {
  SplitG2,        // "split-G2"
  G2,             // "G2"
  F4,             // "F4"
  E6Split,        // "1E6-split"
  E6D4,           // "1E6-D4"
  E6TwoQuasiSplit,  // "2E6-quasisplit"
  E6TwoD4,        // "2E6-D4"
  E7Split,        // "E7-split"
  E7E6,           // "E7-E6"
};

CatalogCase catalog_case_from_string(const std::string& s);
std::string catalog_case_name(CatalogCase c);

struct CatalogParams {
  std::optional<QuadForm> q0;  // 7-dimensional pure Pfister part
  std::optional<FormEntry> a;  // quadratic extension class
  std::optional<QuadForm> q3;  // 3-fold Pfister invariant (dim 8)
  std::optional<QuadForm> q5;  // 5-fold Pfister invariant (dim 32)
};

QuadForm catalog(CatalogCase c, const CatalogParams& params);

/// q0 with seven independent symbols u1..u7.
QuadForm symbolic_q0();
/// q0 from Pfister generator symbols g1,g2,g3 (products carried exactly).
QuadForm symbolic_pfister_q0();

// ---------------------------------------------------------------------------
// cross-route verification

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs the three-route consistency checks: coefficient sums vs dimension
/// formula vs brute-force traces on Z_H(A), then the assembled form against
/// the catalog entry under the given numeric instantiation of all symbols.
VerifyReport verify(const TitsIndex& idx, const SubalgebraSpec& spec,
                    const std::map<std::string, Rat>& instantiation,
                    std::optional<CatalogCase> cat = std::nullopt,
                    const CatalogParams& params = {});

}  // namespace kf
