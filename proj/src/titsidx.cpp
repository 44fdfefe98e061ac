#include "kf/titsidx.hpp"

#include <algorithm>
#include <set>

namespace kf {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TitsIndex TitsIndex::inner(const RootSystem& rs, const std::vector<int>& circled_vertices) {
  TitsIndex idx{rs, {}, {}, std::nullopt};
  for (int v = 1; v <= rs.rank(); ++v) idx.orbits.push_back({v});
  std::set<int> c(circled_vertices.begin(), circled_vertices.end());
  for (size_t i = 0; i < idx.orbits.size(); ++i)
    if (c.count(idx.orbits[i][0])) idx.circled.push_back(i);
  return idx;
}

TitsIndex TitsIndex::outer(const RootSystem& rs, std::vector<std::vector<int>> orbits,
                           const std::vector<std::vector<int>>& circled_orbits,
                           const FormEntry& a) {
  TitsIndex idx{rs, {}, {}, a};
  std::set<int> seen;
  for (auto& o : orbits) {
    idx.orbits.push_back(sorted_copy(o));
    for (int v : o) seen.insert(v);
  }
  for (int v = 1; v <= rs.rank(); ++v)
    if (!seen.count(v)) idx.orbits.push_back({v});
  std::sort(idx.orbits.begin(), idx.orbits.end());
  for (const auto& co : circled_orbits) {
    auto it = std::find(idx.orbits.begin(), idx.orbits.end(), sorted_copy(co));
    if (it == idx.orbits.end())
      throw error("circled set is not a *-orbit of the index");
    idx.circled.push_back(static_cast<size_t>(it - idx.orbits.begin()));
  }
  std::sort(idx.circled.begin(), idx.circled.end());
  return idx;
}

bool TitsIndex::is_inner() const {
  return std::all_of(orbits.begin(), orbits.end(),
                     [](const auto& o) { return o.size() == 1; });
}

bool TitsIndex::vertex_circled(int v) const {
  for (size_t i : circled)
    for (int x : orbits[i])
      if (x == v) return true;
  return false;
}

std::vector<int> TitsIndex::circled_vertices() const {
  std::vector<int> out;
  for (size_t i : circled)
    for (int x : orbits[i]) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TitsIndex::anisotropic_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= rs.rank(); ++v)
    if (!vertex_circled(v)) out.push_back(v);
  return out;
}

const std::vector<int>* TitsIndex::orbit_of(int v) const {
  for (const auto& o : orbits)
    for (int x : o)
      if (x == v) return &o;
  return nullptr;
}

std::vector<std::string> validate(const TitsIndex& idx) {
  std::vector<std::string> bad;
  std::set<int> seen;
  for (const auto& o : idx.orbits) {
    if (o.empty() || o.size() > 2) {
      bad.push_back("orbit of size " + std::to_string(o.size()) +
                    " (only sizes 1 and 2 are supported)");
      continue;
    }
    for (int v : o) {
      if (v < 1 || v > idx.rs.rank())
        bad.push_back("orbit vertex " + std::to_string(v) + " out of range");
      else if (!seen.insert(v).second)
        bad.push_back("vertex " + std::to_string(v) + " appears in two orbits");
    }
  }
  for (int v = 1; v <= idx.rs.rank(); ++v)
    if (!seen.count(v)) bad.push_back("vertex " + std::to_string(v) + " missing from orbits");
  if (!bad.empty()) return bad;

  // the orbit swap must be a diagram automorphism
  std::vector<int> sigma(idx.rs.rank() + 1);
  for (int v = 1; v <= idx.rs.rank(); ++v) sigma[v] = v;
  for (const auto& o : idx.orbits)
    if (o.size() == 2) {
      sigma[o[0]] = o[1];
      sigma[o[1]] = o[0];
    }
  for (int i = 1; i <= idx.rs.rank(); ++i)
    for (int j = 1; j <= idx.rs.rank(); ++j)
      if (idx.rs.cartan()[i - 1][j - 1] != idx.rs.cartan()[sigma[i] - 1][sigma[j] - 1]) {
        bad.push_back("orbit partition is not a diagram automorphism");
        i = j = idx.rs.rank() + 1;
      }

  for (size_t i : idx.circled)
    if (i >= idx.orbits.size()) bad.push_back("circled orbit id out of range");

  bool has_pair = !idx.is_inner();
  if (has_pair && !idx.extension_param)
    bad.push_back("type-2 index requires the extension parameter a");
  if (!has_pair && idx.extension_param)
    bad.push_back("inner index must not carry an extension parameter");
  return bad;
}

void validate_or_throw(const TitsIndex& idx) {
  auto bad = validate(idx);
  if (!bad.empty()) {
    std::string msg = "invalid Tits index:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw error(msg);
  }
}

namespace {

TorusBasisElement element_for_orbit(const TitsIndex& idx, const std::vector<int>& orbit,
                                    bool diff) {
  TorusBasisElement e;
  if (orbit.size() == 1) {
    e.kind = TorusKind::Single;
    e.coweights = {idx.rs.coweight(orbit[0])};
  } else {
    e.kind = diff ? TorusKind::OrbitDiff : TorusKind::OrbitSum;
    e.carries_sqrt_a = diff;
    e.coweights = {idx.rs.coweight(orbit[0]), idx.rs.coweight(orbit[1])};
  }
  return e;
}

std::vector<TorusBasisElement> elements_for_orbits(const TitsIndex& idx,
                                                   const std::vector<std::vector<int>>& orbits) {
  std::vector<TorusBasisElement> out;
  for (const auto& o : orbits) {
    out.push_back(element_for_orbit(idx, o, false));
    if (o.size() == 2) out.push_back(element_for_orbit(idx, o, true));
  }
  return out;
}

}  // namespace

std::vector<TorusBasisElement> split_torus_basis(const TitsIndex& idx) {
  validate_or_throw(idx);
  std::vector<std::vector<int>> circled;
  for (size_t i : idx.circled) circled.push_back(idx.orbits[i]);
  return elements_for_orbits(idx, circled);
}

std::vector<TorusBasisElement> centralizer_basis(const TitsIndex& idx,
                                                 const std::vector<int>& delta_prime) {
  validate_or_throw(idx);
  std::set<int> dp(delta_prime.begin(), delta_prime.end());
  for (int v : idx.anisotropic_vertices())
    if (!dp.count(v))
      throw error("delta_prime must contain the anisotropic kernel (vertex " +
                  std::to_string(v) + " missing)");
  std::vector<std::vector<int>> outside;
  for (const auto& o : idx.orbits) {
    size_t inside = 0;
    for (int v : o) inside += dp.count(v);
    if (inside == o.size()) continue;
    if (inside != 0) throw error("delta_prime is not stable under the *-action");
    outside.push_back(o);
  }
  return elements_for_orbits(idx, outside);
}

AnisotropicKernel anisotropic_kernel(const TitsIndex& idx) {
  validate_or_throw(idx);
  AnisotropicKernel k;
  auto delta0 = idx.anisotropic_vertices();
  if (delta0.empty()) return k;
  k.components = subsystem_components(idx.rs, delta0);
  for (const auto& c : k.components) k.dim += component_dim(idx.rs, c);
  return k;
}

}  // namespace kf
