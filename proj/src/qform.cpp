#include "kf/qform.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace kf {

// ---------------------------------------------------------------------------
// FormEntry

FormEntry FormEntry::from_rational(const Rat& x) {
  if (x == 0) throw error("form entry must be nonzero");
  FormEntry e;
  e.sign = sgn(x) > 0 ? 1 : -1;
  // num/den and num*den differ by den^2, so they share a square class.
  e.magnitude = squarefree_part(x.get_num() * x.get_den());
  return e;
}

FormEntry FormEntry::symbol(const std::string& name) {
  if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
    throw error("bad symbol name: '" + name + "'");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw error("bad symbol name: '" + name + "'");
  FormEntry e;
  e.symbols.push_back(name);
  return e;
}

FormEntry FormEntry::operator*(const FormEntry& o) const {
  FormEntry r;
  r.sign = sign * o.sign;
  Int g;
  mpz_gcd(g.get_mpz_t(), magnitude.get_mpz_t(), o.magnitude.get_mpz_t());
  r.magnitude = (magnitude / g) * (o.magnitude / g);
  // symmetric difference = exponents mod 2
  std::set_symmetric_difference(symbols.begin(), symbols.end(),
                                o.symbols.begin(), o.symbols.end(),
                                std::back_inserter(r.symbols));
  return r;
}

FormEntry FormEntry::negated() const {
  FormEntry r = *this;
  r.sign = -r.sign;
  return r;
}

Rat FormEntry::numeric_value() const {
  if (is_symbolic()) throw error("entry " + str() + " is symbolic");
  return Rat(sign * magnitude);
}

std::strong_ordering FormEntry::operator<=>(const FormEntry& o) const {
  if (auto c = symbols <=> o.symbols; c != 0) return c;
  if (auto c = cmp(magnitude, o.magnitude) <=> 0; c != 0) return c;
  return sign <=> o.sign;
}

std::string FormEntry::str() const {
  std::string s;
  if (sign < 0) s += '-';
  s += magnitude.get_str();
  for (const auto& sym : symbols) {
    s += '*';
    s += sym;
  }
  return s;
}

FormEntry FormEntry::parse(const std::string& text) {
  size_t pos = 0;
  FormEntry e;
  if (pos < text.size() && text[pos] == '-') {
    e.sign = -1;
    ++pos;
  }
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw error("form entry '" + text + "': expected magnitude");
  Int mag(text.substr(start, pos - start));
  if (mag == 0) throw error("form entry '" + text + "': zero magnitude");
  e.magnitude = squarefree_part(mag);
  std::vector<std::string> syms;
  while (pos < text.size()) {
    if (text[pos] != '*') throw error("form entry '" + text + "': expected '*'");
    ++pos;
    start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (pos == start) throw error("form entry '" + text + "': expected symbol");
    syms.push_back(text.substr(start, pos - start));
  }
  std::sort(syms.begin(), syms.end());
  for (const auto& s : syms) e = e * FormEntry::symbol(s);
  return e;
}

// ---------------------------------------------------------------------------
// QuadForm

QuadForm::QuadForm(std::vector<FormEntry> entries, long hyperbolic)
    : entries_(std::move(entries)), hyperbolic_(hyperbolic) {
  if (hyperbolic_ < 0) throw error("negative hyperbolic count");
  normalize();
}

void QuadForm::normalize() {
  std::sort(entries_.begin(), entries_.end());
  // fold {e, -e} pairs; after sorting, the negative twin of a positive entry
  // sits adjacent (sign is the last sort key)
  std::vector<FormEntry> out;
  size_t i = 0;
  while (i < entries_.size()) {
    size_t j = i;
    while (j < entries_.size() && entries_[j].magnitude == entries_[i].magnitude &&
           entries_[j].symbols == entries_[i].symbols)
      ++j;
    long neg = 0, pos = 0;
    for (size_t k = i; k < j; ++k) (entries_[k].sign < 0 ? neg : pos)++;
    long pairs = std::min(neg, pos);
    hyperbolic_ += pairs;
    FormEntry e = entries_[i];
    e.sign = -1;
    for (long k = 0; k < neg - pairs; ++k) out.push_back(e);
    e.sign = 1;
    for (long k = 0; k < pos - pairs; ++k) out.push_back(e);
    i = j;
  }
  entries_ = std::move(out);
}

bool QuadForm::has_symbols() const {
  for (const auto& e : entries_)
    if (e.is_symbolic()) return true;
  return false;
}

std::vector<FormEntry> QuadForm::expanded_entries() const {
  std::vector<FormEntry> out = entries_;
  FormEntry one, minus_one;
  minus_one.sign = -1;
  for (long k = 0; k < hyperbolic_; ++k) {
    out.push_back(one);
    out.push_back(minus_one);
  }
  return out;
}

QuadForm QuadForm::forced_dim(long d) const {
  long diff = d - dim();
  if (diff % 2 != 0) throw error("forced_dim: parity mismatch");
  long h = hyperbolic_ + diff / 2;
  if (h < 0) throw error("forced_dim: not enough hyperbolic planes to strip");
  return QuadForm(entries_, h);
}

std::string QuadForm::str() const {
  std::string s = "<";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += entries_[i].str();
  }
  s += '>';
  if (hyperbolic_ > 0) s += " + " + std::to_string(hyperbolic_) + "H";
  return s;
}

QuadForm QuadForm::parse(const std::string& text) {
  size_t lt = text.find('<');
  size_t gt = text.find('>');
  if (lt == std::string::npos || gt == std::string::npos || gt < lt)
    throw error("form '" + text + "': expected <...>");
  for (size_t i = 0; i < lt; ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw error("form '" + text + "': junk before '<'");
  std::vector<FormEntry> entries;
  std::string inner = text.substr(lt + 1, gt - lt - 1);
  size_t pos = 0;
  while (pos < inner.size()) {
    size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw error("form '" + text + "': empty entry");
    entries.push_back(FormEntry::parse(tok.substr(a, b - a + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == inner.size()) throw error("form '" + text + "': trailing comma");
  }
  long hyper = 0;
  size_t rest = gt + 1;
  while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
  if (rest < text.size()) {
    if (text[rest] != '+') throw error("form '" + text + "': expected '+ kH'");
    ++rest;
    while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
    size_t start = rest;
    while (rest < text.size() && std::isdigit(static_cast<unsigned char>(text[rest]))) ++rest;
    if (rest == start || rest == text.size() || text[rest] != 'H')
      throw error("form '" + text + "': expected '+ kH'");
    hyper = std::stol(text.substr(start, rest - start));
    ++rest;
    while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
    if (rest != text.size()) throw error("form '" + text + "': junk after H");
  }
  return QuadForm(std::move(entries), hyper);
}

// ---------------------------------------------------------------------------
// operations

QuadForm orth_sum(const QuadForm& a, const QuadForm& b) {
  std::vector<FormEntry> entries = a.entries();
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return QuadForm(std::move(entries), a.hyperbolic_count() + b.hyperbolic_count());
}

QuadForm scale(const FormEntry& c, const QuadForm& q) {
  std::vector<FormEntry> entries;
  entries.reserve(q.entries().size());
  for (const auto& e : q.entries()) entries.push_back(c * e);
  // c*H is isometric to H, so the hyperbolic count carries over
  return QuadForm(std::move(entries), q.hyperbolic_count());
}

QuadForm lambda2(const QuadForm& q) {
  if (q.hyperbolic_count() > 0)
    throw error("lambda2 requires a purely diagonal form");
  const auto& a = q.entries();
  std::vector<FormEntry> out;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) out.push_back(a[i] * a[j]);
  return QuadForm(std::move(out));
}

QuadForm pfister(const std::vector<FormEntry>& gens) {
  std::vector<FormEntry> entries{FormEntry{}};
  for (const auto& g : gens) {
    std::vector<FormEntry> next = entries;
    for (const auto& e : entries) next.push_back(e * g);
    entries = std::move(next);
  }
  return QuadForm(std::move(entries));
}

QuadForm pfister_pure(const std::vector<FormEntry>& gens) {
  std::vector<FormEntry> entries{FormEntry{}};
  for (const auto& g : gens) {
    std::vector<FormEntry> next = entries;
    for (const auto& e : entries) next.push_back(e * g);
    entries = std::move(next);
  }
  entries.erase(entries.begin());  // the subset-product expansion starts at <1>
  return QuadForm(std::move(entries));
}

QuadForm killing_of_so(const QuadForm& q) {
  if (q.dim() < 3) throw error("killing_of_so requires dim >= 3");
  QuadForm expanded(q.expanded_entries());
  FormEntry c = FormEntry::from_rational(Rat(-2 * (q.dim() - 2)));
  return scale(c, lambda2(expanded));
}

FormEntry instantiate(const FormEntry& e, const std::map<std::string, Rat>& values) {
  FormEntry r;
  r.sign = e.sign;
  r.magnitude = e.magnitude;
  Rat v = 1;
  for (const auto& sym : e.symbols) {
    auto it = values.find(sym);
    if (it == values.end()) throw error("no value given for symbol '" + sym + "'");
    if (it->second == 0) throw error("symbol '" + sym + "' must be nonzero");
    v *= it->second;
  }
  return r * FormEntry::from_rational(v);
}

QuadForm instantiate(const QuadForm& q, const std::map<std::string, Rat>& values) {
  std::vector<FormEntry> entries;
  entries.reserve(q.entries().size());
  for (const auto& e : q.entries()) entries.push_back(instantiate(e, values));
  return QuadForm(std::move(entries), q.hyperbolic_count());
}

// ---------------------------------------------------------------------------
// local invariants

namespace {

// x = p^alpha * u with u prime to p; alpha is 0 or 1 for squarefree x.
std::pair<int, Int> split_at(const Int& x, const Int& p) {
  if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) return {1, x / p};
  return {0, x};
}

int eps4(const Int& u) {  // (u-1)/2 mod 2 for odd u
  Int m = ((u - 1) / 2) % 2;
  return static_cast<int>(std::abs(m.get_si()));
}

int omega8(const Int& u) {  // (u^2-1)/8 mod 2 for odd u
  Int m = ((u * u - 1) / 8) % 2;
  return static_cast<int>(std::abs(m.get_si()));
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
  if (a == 0 || b == 0) throw error("hilbert_symbol of zero");
  FormEntry ea = FormEntry::from_rational(a);
  FormEntry eb = FormEntry::from_rational(b);
  Int x = ea.sign * ea.magnitude;
  Int y = eb.sign * eb.magnitude;
  if (p == 0) return (sgn(x) < 0 && sgn(y) < 0) ? -1 : 1;
  if (p == 2) {
    auto [alpha, u] = split_at(x, p);
    auto [beta, v] = split_at(y, p);
    int e = eps4(u) * eps4(v) + alpha * omega8(v) + beta * omega8(u);
    return e % 2 ? -1 : 1;
  }
  auto [alpha, u] = split_at(x, p);
  auto [beta, v] = split_at(y, p);
  int r = 1;
  if (alpha * beta % 2 && eps4(p)) r = -r;
  if (beta % 2) r *= legendre(u, p);
  if (alpha % 2) r *= legendre(v, p);
  return r;
}

int hasse_invariant(const QuadForm& q, const Int& p) {
  auto entries = q.expanded_entries();
  int s = 1;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      s *= hilbert_symbol(entries[i].numeric_value(), entries[j].numeric_value(), p);
  return s;
}

long signature_numeric(const QuadForm& q) {
  long s = 0;
  for (const auto& e : q.entries()) {
    if (e.is_symbolic()) throw error("signature of symbolic form " + q.str());
    s += e.sign;
  }
  return s;
}

FormEntry discriminant_numeric(const QuadForm& q) {
  FormEntry d;
  for (const auto& e : q.expanded_entries()) {
    if (e.is_symbolic()) throw error("discriminant of symbolic form " + q.str());
    d = d * e;
  }
  return d;
}

bool isometric_numeric(const QuadForm& a, const QuadForm& b) {
  if (a.has_symbols() || b.has_symbols())
    throw error("isometric_numeric requires numeric forms; instantiate symbols first");
  if (a.dim() != b.dim()) return false;
  if (signature_numeric(a) != signature_numeric(b)) return false;
  if (!(discriminant_numeric(a) == discriminant_numeric(b))) return false;
  std::set<Int> primes{2};
  for (const auto& e : orth_sum(a, b).entries())
    for (const auto& p : prime_factors(e.magnitude)) primes.insert(p);
  for (const auto& p : primes)
    if (hasse_invariant(a, p) != hasse_invariant(b, p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Gram matrices

GramMatrix::GramMatrix(std::vector<std::vector<Rat>> rows) : m(std::move(rows)) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw error("Gram matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) throw error("Gram matrix must be symmetric");
}

QuadForm diagonalize(const GramMatrix& g) {
  std::vector<std::vector<Rat>> m = g.m;
  const size_t n = m.size();
  std::vector<FormEntry> entries;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      size_t piv = i;
      for (size_t j = i + 1; j < n; ++j)
        if (m[j][j] != 0) {
          piv = j;
          break;
        }
      if (piv != i) {
        std::swap(m[piv], m[i]);
        for (auto& row : m) std::swap(row[piv], row[i]);
      } else {
        // all remaining diagonal entries vanish; bring in an off-diagonal one
        size_t k = i;
        for (size_t j = i + 1; j < n && k == i; ++j)
          if (m[i][j] != 0) k = j;
        if (k == i) throw error("diagonalize: singular matrix");
        for (size_t j = i; j < n; ++j) m[i][j] += m[k][j];
        for (size_t j = i; j < n; ++j) m[j][i] += m[j][k];
      }
    }
    Rat piv = m[i][i];
    for (size_t j = i + 1; j < n; ++j) {
      if (m[j][i] == 0) continue;
      Rat f = m[j][i] / piv;
      for (size_t k = i; k < n; ++k) m[j][k] -= f * m[i][k];
    }
    for (size_t j = i + 1; j < n; ++j) m[i][j] = 0;
    entries.push_back(FormEntry::from_rational(piv));
  }
  return QuadForm(std::move(entries));
}

}  // namespace kf
