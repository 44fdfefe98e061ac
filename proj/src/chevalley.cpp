#include "kf/chevalley.hpp"

#include <algorithm>
#include <functional>

namespace kf {

namespace {

std::vector<int> vneg(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<int> vadd(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<int> vsub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool positive(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

int ChevalleyAlgebra::root_index(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

int ChevalleyAlgebra::pairing(int root, int i) const {
  int s = 0;
  for (int j = 0; j < rs_.rank(); ++j) s += rs_.cartan()[i][j] * roots_[root].coeffs[j];
  return s;
}

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystem& rs) {
  if (rs.rank() > 8) throw error("chevalley: rank > 8 not supported");
  ChevalleyAlgebra alg(rs);
  const auto& pos = rs.positive_roots();
  const long P = static_cast<long>(pos.size());
  alg.positives_ = P;
  alg.roots_ = pos;
  for (const Root& r : pos) alg.roots_.push_back(Root{vneg(r.coeffs)});
  for (long i = 0; i < 2 * P; ++i) alg.index_[alg.roots_[i].coeffs] = static_cast<int>(i);
  for (const Root& r : alg.roots_) alg.norm_.push_back(2 * rs.half_norm(r));

  // coroot of alpha = sum (c_i d_i / d_alpha) h_i
  for (const Root& r : alg.roots_) {
    Rat dr = rs.half_norm(r);
    std::vector<Int> q;
    for (int i = 0; i < rs.rank(); ++i) {
      Rat v = Rat(r.coeffs[i]) * rs.root_length_data()[i] / dr;
      if (v.get_den() != 1) throw error("chevalley: coroot not integral");
      q.push_back(v.get_num());
    }
    alg.coroot_.push_back(std::move(q));
  }

  // p(u,v) = largest k with v - k u a root
  auto pmax = [&](int u, int v) {
    int p = 0;
    std::vector<int> w = alg.roots_[v].coeffs;
    while (true) {
      w = vsub(w, alg.roots_[u].coeffs);
      if (alg.root_index(w) < 0) break;
      ++p;
      if (p > 4) throw error("chevalley: root string too long");
    }
    return p;
  };

  // structure constants on positive special pairs, then the full table via
  // the standard sign identities
  std::map<std::pair<int, int>, int> npos;
  std::function<int(int, int)> lookup = [&](int u, int v) -> int {
    if (u < P && v < P) {
      if (u < v) {
        auto it = npos.find({u, v});
        if (it == npos.end()) throw error("chevalley: table order violated");
        return it->second;
      }
      return -lookup(v, u);
    }
    if (u >= P && v >= P) return -lookup(u - P, v - P);
    auto reduce_mixed = [&](int up, int vn) -> Rat {
      // up positive, vn negative, sum a root
      std::vector<int> s = vadd(alg.roots_[up].coeffs, alg.roots_[vn].coeffs);
      int w = alg.root_index(vneg(s));
      if (positive(s))
        return alg.norm_[w] / alg.norm_[up] * Rat(lookup(vn, w));
      return alg.norm_[w] / alg.norm_[vn] * Rat(lookup(w, up));
    };
    Rat r = (u < P) ? reduce_mixed(u, v) : -reduce_mixed(v, u);
    if (r.get_den() != 1) throw error("chevalley: non-integral constant");
    return static_cast<int>(r.get_num().get_si());
  };

  for (long gi = 0; gi < P; ++gi) {
    if (alg.roots_[gi].height() < 2) continue;
    std::vector<std::pair<int, int>> special;
    for (long a = 0; a < gi; ++a) {
      int b = alg.root_index(vsub(alg.roots_[gi].coeffs, alg.roots_[a].coeffs));
      if (b >= 0 && b < P && a < b) special.push_back({static_cast<int>(a), b});
    }
    if (special.empty()) throw error("chevalley: no special pair for a non-simple root");
    auto [a1, b1] = special.front();  // extraspecial: minimal first member
    npos[{a1, b1}] = pmax(a1, b1) + 1;
    for (size_t k = 1; k < special.size(); ++k) {
      auto [a, b] = special[k];
      Rat t2 = 0, t3 = 0;
      std::vector<int> d2 = vsub(alg.roots_[b1].coeffs, alg.roots_[a].coeffs);
      if (alg.root_index(d2) >= 0) {
        int na = lookup(b1, alg.root_index(vneg(alg.roots_[a].coeffs)));
        int nb = lookup(alg.root_index(d2), a1);
        t2 = Rat(na) * Rat(nb);
      }
      std::vector<int> d3 = vsub(alg.roots_[a1].coeffs, alg.roots_[a].coeffs);
      if (alg.root_index(d3) >= 0) {
        int na = lookup(alg.root_index(vneg(alg.roots_[a].coeffs)), a1);
        int nb = lookup(alg.root_index(d3), b1);
        t3 = Rat(na) * Rat(nb);
      }
      Rat val = alg.norm_[gi] / alg.norm_[b] * (t2 + t3) / Rat(npos[{a1, b1}]);
      if (val.get_den() != 1) throw error("chevalley: non-integral constant");
      int n = static_cast<int>(val.get_num().get_si());
      if (std::abs(n) != pmax(a, b) + 1) throw error("chevalley: constant fails |N| = p+1");
      npos[{a, b}] = n;
    }
  }

  alg.n_.assign(2 * P, std::vector<int16_t>(2 * P, 0));
  for (long i = 0; i < 2 * P; ++i)
    for (long j = 0; j < 2 * P; ++j) {
      std::vector<int> s = vadd(alg.roots_[i].coeffs, alg.roots_[j].coeffs);
      if (alg.root_index(s) < 0) continue;
      int n = lookup(static_cast<int>(i), static_cast<int>(j));
      if (std::abs(n) != pmax(static_cast<int>(i), static_cast<int>(j)) + 1)
        throw error("chevalley: table fails |N| = p+1");
      alg.n_[i][j] = static_cast<int16_t>(n);
    }
  return alg;
}

int ChevalleyAlgebra::structure_constant(const std::vector<int>& u,
                                         const std::vector<int>& v) const {
  int iu = root_index(u), iv = root_index(v);
  if (iu < 0 || iv < 0) throw error("structure_constant: not a root");
  if (root_index(vadd(u, v)) < 0) return 0;
  return n_[iu][iv];
}

SparseVec ChevalleyAlgebra::bracket_basis(int a, int b) const {
  const int r = rs_.rank();
  SparseVec out;
  auto add = [&](int k, const Rat& c) {
    if (c == 0) return;
    out[k] += c;
    if (out[k] == 0) out.erase(k);
  };
  if (a < r && b < r) return out;
  if (a < r) {  // [h_a, x_v]
    int v = b - r;
    add(b, Rat(pairing(v, a)));
    return out;
  }
  if (b < r) {  // [x_u, h_b]
    int u = a - r;
    add(a, Rat(-pairing(u, b)));
    return out;
  }
  int u = a - r, v = b - r;
  std::vector<int> s = vadd(roots_[u].coeffs, roots_[v].coeffs);
  bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
  if (zero) {  // [x_u, x_{-u}] = h_u
    for (int i = 0; i < r; ++i) add(i, Rat(coroot_[u][i]));
    return out;
  }
  int si = root_index(s);
  if (si >= 0) add(r + si, Rat(n_[u][v]));
  return out;
}

SparseVec ChevalleyAlgebra::bracket(const SparseVec& v, const SparseVec& w) const {
  SparseVec out;
  for (const auto& [a, ca] : v)
    for (const auto& [b, cb] : w) {
      for (const auto& [k, c] : bracket_basis(a, b)) {
        out[k] += ca * cb * c;
        if (out[k] == 0) out.erase(k);
      }
    }
  return out;
}

Vec ChevalleyAlgebra::torus_element(const std::vector<Rat>& t) const {
  if (static_cast<int>(t.size()) != rs_.rank()) throw error("torus_element: bad length");
  Vec v(dim(), Rat(0));
  for (int i = 0; i < rs_.rank(); ++i) v[i] = t[i];
  return v;
}

Vec ChevalleyAlgebra::torus_element(const CoweightElement& cw) const {
  std::vector<Rat> t;
  for (const Int& x : cw.coeffs) t.push_back(Rat(x));
  return torus_element(t);
}

Vec ChevalleyAlgebra::basis_vector(int index) const {
  Vec v(dim(), Rat(0));
  v.at(index) = 1;
  return v;
}

Mat ChevalleyAlgebra::adjoint(const Vec& v) const {
  const long n = dim();
  if (static_cast<long>(v.size()) != n) throw error("adjoint: bad vector length");
  Mat m(n, Vec(n, Rat(0)));
  for (long b = 0; b < n; ++b) {
    for (long a = 0; a < n; ++a) {
      if (v[a] == 0) continue;
      for (const auto& [k, c] : bracket_basis(static_cast<int>(a), static_cast<int>(b)))
        m[k][b] += v[a] * c;
    }
  }
  return m;
}

Rat ChevalleyAlgebra::trace_form(const Vec& v, const Vec& w) const {
  Mat a = adjoint(v), b = adjoint(w);
  const long n = dim();
  Rat t = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (a[i][j] != 0 && b[j][i] != 0) t += a[i][j] * b[j][i];
  return t;
}

GramMatrix ChevalleyAlgebra::killing_gram_split() const {
  const int r = rs_.rank();
  std::vector<std::vector<Rat>> g(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Rat t = trace_form(basis_vector(i), basis_vector(j));
      g[i][j] = g[j][i] = t;
    }
  return GramMatrix(g);
}

bool ChevalleyAlgebra::jacobi_holds(int a, int b, int c) const {
  SparseVec sa{{a, Rat(1)}}, sb{{b, Rat(1)}}, sc{{c, Rat(1)}};
  SparseVec total = bracket(bracket(sa, sb), sc);
  for (const auto& [k, v] : bracket(bracket(sb, sc), sa)) {
    total[k] += v;
    if (total[k] == 0) total.erase(k);
  }
  for (const auto& [k, v] : bracket(bracket(sc, sa), sb)) {
    total[k] += v;
    if (total[k] == 0) total.erase(k);
  }
  return total.empty();
}

void ChevalleyAlgebra::check_jacobi_exhaustive() const {
  const int n = static_cast<int>(dim());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!jacobi_holds(a, b, c))
          throw error("jacobi identity fails on basis triple (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
}

void ChevalleyAlgebra::check_jacobi_sampled(std::mt19937_64& rng, long trials) const {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(dim()) - 1);
  for (long t = 0; t < trials; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (!jacobi_holds(a, b, c))
      throw error("jacobi identity fails on basis triple (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

}  // namespace kf
