#include "kf/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>

namespace kf {

char family_letter(Family f) {
  return "ABCDEFG"[static_cast<int>(f)];
}

Family family_from_letter(char c) {
  const char* letters = "ABCDEFG";
  const char* pos = std::strchr(letters, std::toupper(static_cast<unsigned char>(c)));
  if (!pos || !*pos) throw error(std::string("unknown family '") + c + "'");
  return static_cast<Family>(pos - letters);
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

std::string Root::str() const {
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty() && coeffs[i] > 0) s += '+';
    if (coeffs[i] == -1)
      s += '-';
    else if (coeffs[i] != 1)
      s += std::to_string(coeffs[i]);
    s += 'a' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// construction

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw error(msg);
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  auto& C = rs.cartan_;
  C.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) C[i][i] = 2;
  rs.d_.assign(rank, Rat(1));
  auto chain = [&](int i, int j) { C[i - 1][j - 1] = C[j - 1][i - 1] = -1; };
  switch (family) {
    case Family::A:
      require(rank >= 1, "A requires rank >= 1");
      for (int i = 1; i < rank; ++i) chain(i, i + 1);
      break;
    case Family::B:
      require(rank >= 2, "B requires rank >= 2");
      for (int i = 1; i < rank; ++i) chain(i, i + 1);
      C[rank - 1][rank - 2] = -2;  // alpha_rank is short
      rs.d_[rank - 1] = Rat(1, 2);
      break;
    case Family::C:
      require(rank >= 2, "C requires rank >= 2");
      for (int i = 1; i < rank; ++i) chain(i, i + 1);
      C[rank - 2][rank - 1] = -2;  // alpha_rank is long
      for (int i = 0; i < rank - 1; ++i) rs.d_[i] = Rat(1, 2);
      break;
    case Family::D:
      require(rank >= 4, "D requires rank >= 4");
      for (int i = 1; i < rank - 1; ++i) chain(i, i + 1);
      C[rank - 1][rank - 3] = C[rank - 3][rank - 1] = -1;
      C[rank - 1][rank - 2] = C[rank - 2][rank - 1] = 0;
      break;
    case Family::E:
      require(rank >= 6 && rank <= 8, "E requires rank 6..8");
      chain(1, 3);
      for (int i = 3; i < rank; ++i) chain(i, i + 1);
      chain(2, 4);
      break;
    case Family::F:
      require(rank == 4, "F requires rank 4");
      chain(1, 2);
      chain(2, 3);
      chain(3, 4);
      C[2][1] = -2;  // alpha_3, alpha_4 are short
      rs.d_[2] = rs.d_[3] = Rat(1, 2);
      break;
    case Family::G:
      require(rank == 2, "G requires rank 2");
      chain(1, 2);
      C[0][1] = -3;  // alpha_1 is short
      rs.d_[0] = Rat(1, 3);
      break;
  }
  rs.enumerate_roots();
  return rs;
}

RootSystem RootSystem::build(const std::string& name) {
  require(name.size() >= 2, "type name too short: '" + name + "'");
  Family fam = family_from_letter(name[0]);
  for (size_t i = 1; i < name.size(); ++i)
    require(std::isdigit(static_cast<unsigned char>(name[i])), "bad type name: '" + name + "'");
  return build(fam, std::stoi(name.substr(1)));
}

std::string RootSystem::name() const {
  return family_letter(family_) + std::to_string(rank_);
}

void RootSystem::enumerate_roots() {
  std::set<std::vector<int>> known;
  std::vector<Root> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(rank_, 0);
    c[i] = 1;
    known.insert(c);
    frontier.push_back(Root{c});
  }
  positive_ = frontier;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 0; i < rank_; ++i) {
        // q = p - <beta, coroot_i> decides whether beta + alpha_i is a root
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * beta.coeffs[j];
        int p = 0;
        std::vector<int> back = beta.coeffs;
        while (true) {
          back[i] -= 1;
          bool nonzero = false;
          for (int v : back) nonzero |= (v != 0);
          if (nonzero && known.count(back)) ++p;
          else break;
        }
        if (p - pairing > 0) {
          std::vector<int> fwd = beta.coeffs;
          fwd[i] += 1;
          if (known.insert(fwd).second) next.push_back(Root{fwd});
        }
      }
    }
    positive_.insert(positive_.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs < b.coeffs;
  });
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
  std::vector<int> c = coeffs;
  bool any_neg = std::any_of(c.begin(), c.end(), [](int v) { return v < 0; });
  if (any_neg)
    for (int& v : c) v = -v;
  Root r{c};
  return std::binary_search(positive_.begin(), positive_.end(), r,
                            [](const Root& a, const Root& b) {
                              if (a.height() != b.height()) return a.height() < b.height();
                              return a.coeffs < b.coeffs;
                            });
}

bool RootSystem::simply_laced() const {
  return std::all_of(d_.begin(), d_.end(), [](const Rat& x) { return x == 1; });
}

int RootSystem::coxeter_number() const {
  long total = 2 * static_cast<long>(positive_.size());
  if (total % rank_ != 0) throw error("coxeter number not integral");
  return static_cast<int>(total / rank_);
}

int RootSystem::dual_coxeter_number() const {
  // 1 + sum of highest-root coefficients weighted by the length data
  Rat s = 1;
  const Root& theta = highest_root();
  for (int i = 0; i < rank_; ++i) s += Rat(theta.coeffs[i]) * d_[i];
  if (s.get_den() != 1) throw error("dual coxeter number not integral");
  return static_cast<int>(s.get_num().get_si());
}

Int RootSystem::connection_index() const {
  std::vector<std::vector<Rat>> m(rank_, std::vector<Rat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = cartan_[i][j];
  Rat d = det(m);
  if (d.get_den() != 1 || d <= 0) throw error("bad Cartan determinant");
  return d.get_num();
}

std::vector<int> RootSystem::coroot_pairing(const Root& beta) const {
  std::vector<int> out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += cartan_[i][j] * beta.coeffs[j];
  return out;
}

Rat RootSystem::half_norm(const Root& beta) const {
  // (beta,beta)/2 with (alpha_i,alpha_j) = d_i * C[i][j]
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (beta.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += Rat(beta.coeffs[i] * beta.coeffs[j]) * d_[i] * Rat(cartan_[i][j]);
  }
  return s / 2;
}

CoweightElement RootSystem::coweight(int vertex) const {
  if (vertex < 1 || vertex > rank_) throw error("coweight: vertex out of range");
  // c * coweight_j solves C^T x = c e_j; for the simply connected datum
  // c = det(C) clears all denominators.
  Int c = connection_index();
  std::vector<std::vector<Rat>> m(rank_, std::vector<Rat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = cartan_[j][i];
  std::vector<Rat> rhs(rank_, Rat(0));
  rhs[vertex - 1] = Rat(c);
  std::vector<Rat> x = solve(std::move(m), std::move(rhs));
  CoweightElement cw;
  cw.vertex = vertex;
  cw.c = c;
  for (const Rat& v : x) {
    if (v.get_den() != 1) throw error("coweight coefficients not integral");
    cw.coeffs.push_back(v.get_num());
  }
  return cw;
}

// ---------------------------------------------------------------------------
// grading

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_vertices(const RootSystem& rs, const std::vector<int>& v) {
  for (int x : v)
    if (x < 1 || x > rs.rank()) throw error("vertex " + std::to_string(x) + " out of range");
}

}  // namespace

Grading grade(const RootSystem& rs, const std::vector<int>& J) {
  Grading g;
  g.J = sorted_unique(J);
  check_vertices(rs, g.J);
  std::vector<bool> in_J(rs.rank() + 1, false);
  for (int v : g.J) in_J[v] = true;

  std::map<std::pair<int, std::vector<int>>, ShapeBucket> buckets;
  for (const Root& beta : rs.positive_roots()) {
    int level = 0;
    std::vector<int> shape(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      if (!in_J[i + 1]) {
        level += beta.coeffs[i];
        shape[i] = beta.coeffs[i];
      }
    if (level == 0) {
      ++g.level0_count;
      continue;
    }
    auto& b = buckets[{level, shape}];
    b.shape = shape;
    b.roots.push_back(beta);
  }
  for (auto& [key, b] : buckets) {
    // roots arrive in (height, lex) order, so the minimum is the front; the
    // ABS grading requires it to be unique
    b.minimal = b.roots.front();
    if (b.roots.size() > 1 && b.roots[1].height() == b.minimal.height())
      throw error("minimal-height root not unique for shape of level " +
                  std::to_string(key.first));
    g.levels[key.first].push_back(b);
  }
  return g;
}

Int weyl_dim(const RootSystem& rs, const std::vector<int>& Jin, const std::vector<Rat>& hw) {
  std::vector<int> J = sorted_unique(Jin);
  check_vertices(rs, J);
  if (hw.size() != J.size()) throw error("weyl_dim: weight length mismatch");
  for (const Rat& x : hw)
    if (x < 0) throw error("weyl_dim: weight not dominant");
  // (omega_k, alpha) = d_k * (coefficient of alpha_k in alpha), so both inner
  // products in the formula reduce to weighted coefficient sums.
  const auto& d = rs.root_length_data();
  Rat num = 1, den = 1;
  for (const Root& alpha : positive_roots_supported(rs, J)) {
    Rat top = 0, bot = 0;
    for (size_t k = 0; k < J.size(); ++k) {
      Rat w = d[J[k] - 1] * Rat(alpha.coeffs[J[k] - 1]);
      top += (hw[k] + 1) * w;
      bot += w;
    }
    num *= top;
    den *= bot;
  }
  Rat dim = num / den;
  if (dim.get_den() != 1 || dim <= 0) throw error("weyl_dim: non-integral result");
  return dim.get_num();
}

Int weyl_dim(const RootSystem& rs, const std::vector<Rat>& hw) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i + 1;
  return weyl_dim(rs, all, hw);
}

std::vector<Rat> restrict_weight(const RootSystem& rs, const std::vector<int>& Jin,
                                 const Root& root) {
  std::vector<int> J = sorted_unique(Jin);
  Grading g = grade(rs, J);
  bool minimal = false;
  for (const auto& [level, bs] : g.levels)
    for (const auto& b : bs)
      if (b.minimal == root) minimal = true;
  if (!minimal) throw error("restrict_weight: root " + root.str() +
                            " is not the minimal-height root of a shape");
  std::vector<int> pairing = rs.coroot_pairing(root);
  std::vector<Rat> hw;
  hw.reserve(J.size());
  for (int k : J) hw.push_back(Rat(-pairing[k - 1]));
  for (const Rat& x : hw)
    if (x < 0) throw error("restrict_weight: result not dominant");
  return hw;
}

// ---------------------------------------------------------------------------
// subsystems

std::vector<Root> positive_roots_supported(const RootSystem& rs,
                                           const std::vector<int>& vertices) {
  std::vector<bool> in(rs.rank() + 1, false);
  for (int v : vertices) in[v] = true;
  std::vector<Root> out;
  for (const Root& beta : rs.positive_roots()) {
    bool ok = true;
    for (int i = 0; i < rs.rank() && ok; ++i)
      if (beta.coeffs[i] != 0 && !in[i + 1]) ok = false;
    if (ok) out.push_back(beta);
  }
  return out;
}

long component_dim(const RootSystem& rs, const Component& c) {
  return c.rank + 2 * static_cast<long>(positive_roots_supported(rs, c.vertices).size());
}

namespace {

struct DiagramView {
  const RootSystem& rs;
  std::vector<int> verts;  // ambient, sorted
  std::vector<std::vector<int>> adj;  // local adjacency

  int bond(int u, int v) const {  // local indices
    return rs.cartan()[verts[u] - 1][verts[v] - 1] * rs.cartan()[verts[v] - 1][verts[u] - 1];
  }
  Rat dlen(int u) const { return rs.root_length_data()[verts[u] - 1]; }
};

// Walk a chain starting at local vertex `from` away from `prev`.
std::vector<int> walk(const DiagramView& dv, int from, int prev) {
  std::vector<int> path{from};
  int cur = from;
  while (true) {
    int next = -1;
    for (int n : dv.adj[cur])
      if (n != prev) {
        if (next != -1) throw error("walk: branch encountered");
        next = n;
      }
    if (next == -1) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

Component classify_component(const DiagramView& dv) {
  const RootSystem& rs = dv.rs;
  const int n = static_cast<int>(dv.verts.size());
  auto ambient = [&](const std::vector<int>& local) {
    std::vector<int> out;
    for (int l : local) out.push_back(dv.verts[l]);
    return out;
  };
  if (n == 1) return Component{Family::A, 1, {dv.verts[0]}};

  int max_bond = 1;
  for (int u = 0; u < n; ++u)
    for (int v : dv.adj[u]) max_bond = std::max(max_bond, dv.bond(u, v));

  std::vector<int> ends, nodes;
  for (int u = 0; u < n; ++u) {
    if (dv.adj[u].size() == 1) ends.push_back(u);
    if (dv.adj[u].size() >= 3) nodes.push_back(u);
  }

  if (max_bond == 3) {
    if (n != 2) throw error("triple bond outside G2");
    int short_v = dv.dlen(0) < dv.dlen(1) ? 0 : 1;
    return Component{Family::G, 2, ambient({short_v, 1 - short_v})};
  }

  if (max_bond == 2) {
    if (!nodes.empty()) throw error("branched diagram with a double bond is not simple");
    // orient a chain and decide B/C/F by the short-root pattern
    std::vector<int> path = walk(dv, ends[0], -1);
    int shorts = 0;
    for (int u = 0; u < n; ++u)
      if (dv.dlen(u) < 1) ++shorts;
    auto oriented = [&](bool short_end_last) {
      bool last_short = dv.dlen(path.back()) < dv.dlen(path.front());
      if (last_short != short_end_last) std::reverse(path.begin(), path.end());
      return ambient(path);
    };
    if (n == 4 && shorts == 2) {
      // long-long-short-short chain
      std::vector<int> p = path;
      if (dv.dlen(p.front()) < dv.dlen(p.back())) std::reverse(p.begin(), p.end());
      return Component{Family::F, 4, ambient(p)};
    }
    if (shorts == 1) return Component{Family::B, n, oriented(true)};
    if (shorts == n - 1) return Component{Family::C, n, oriented(false)};
    if (n == 2) return Component{Family::B, 2, ambient(path)};
    throw error("double-bond chain is not of type B, C or F");
  }

  // simply laced
  if (nodes.empty()) {
    std::vector<int> path = walk(dv, ends[0], -1);
    if (dv.verts[path.front()] > dv.verts[path.back()])
      std::reverse(path.begin(), path.end());
    return Component{Family::A, n, ambient(path)};
  }
  if (nodes.size() != 1 || dv.adj[nodes[0]].size() != 3)
    throw error("diagram is not of simple type");
  int center = nodes[0];
  std::vector<std::vector<int>> arms;  // center excluded, inner -> outer
  for (int nb : dv.adj[center]) arms.push_back(walk(dv, nb, center));
  std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return dv.verts[a.back()] < dv.verts[b.back()];
  });
  size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
  std::vector<int> local;
  if (a == 1 && b == 1) {
    // D_n: long arm outer->inner, then center, then the two tips
    local = arms[2];
    std::reverse(local.begin(), local.end());
    local.push_back(center);
    local.push_back(arms[0][0]);
    local.push_back(arms[1][0]);
    return Component{Family::D, n, ambient(local)};
  }
  if (a == 1 && b == 2 && (c >= 2 && c <= 4)) {
    // E_n with the standard numbering: 2-arm outer,inner = vertices 1,3;
    // branch vertex 2; then 4,5,... down the long arm
    local.push_back(arms[1][1]);
    local.push_back(arms[0][0]);
    local.push_back(arms[1][0]);
    local.push_back(center);
    for (int v : arms[2]) local.push_back(v);
    return Component{Family::E, n, ambient(local)};
  }
  throw error("branched diagram is not of simple type");
}

}  // namespace

std::vector<Component> subsystem_components(const RootSystem& rs,
                                            const std::vector<int>& vertices) {
  std::vector<int> verts = sorted_unique(vertices);
  check_vertices(rs, verts);
  std::vector<int> comp_of(verts.size(), -1);
  auto idx = [&](int ambient) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), ambient) - verts.begin());
  };
  int ncomp = 0;
  for (size_t s = 0; s < verts.size(); ++s) {
    if (comp_of[s] != -1) continue;
    std::vector<size_t> stack{s};
    comp_of[s] = ncomp;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < verts.size(); ++v)
        if (comp_of[v] == -1 && rs.cartan()[verts[u] - 1][verts[v] - 1] != 0) {
          comp_of[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<Component> out;
  for (int c = 0; c < ncomp; ++c) {
    DiagramView dv{rs, {}, {}};
    for (size_t v = 0; v < verts.size(); ++v)
      if (comp_of[v] == c) dv.verts.push_back(verts[v]);
    dv.adj.resize(dv.verts.size());
    for (size_t u = 0; u < dv.verts.size(); ++u)
      for (size_t v = 0; v < dv.verts.size(); ++v)
        if (u != v && rs.cartan()[dv.verts[u] - 1][dv.verts[v] - 1] != 0)
          dv.adj[u].push_back(static_cast<int>(v));
    out.push_back(classify_component(dv));
  }
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    return *std::min_element(x.vertices.begin(), x.vertices.end()) <
           *std::min_element(y.vertices.begin(), y.vertices.end());
  });
  return out;
}

}  // namespace kf
