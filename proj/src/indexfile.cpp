#include "kf/indexfile.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace kf {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_vertex_list(const std::string& text, const std::string& key) {
  std::vector<int> out;
  if (text == "-") return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("key '" + key + "': bad vertex '" + tok + "'");
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw parse_error("key '" + key + "': empty list (use '-' for none)");
  return out;
}

std::vector<std::vector<int>> parse_orbits(const std::string& text) {
  std::vector<std::vector<int>> orbits;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '(') throw parse_error("orbits: expected '(' in cycle notation");
    size_t close = text.find(')', pos);
    if (close == std::string::npos) throw parse_error("orbits: unbalanced '('");
    std::stringstream ss(text.substr(pos + 1, close - pos - 1));
    std::vector<int> orbit;
    int v;
    while (ss >> v) orbit.push_back(v);
    if (orbit.size() != 2) throw parse_error("orbits: every cycle must name two vertices");
    orbits.push_back(orbit);
    pos = close + 1;
  }
  if (orbits.empty()) throw parse_error("orbits: no cycles found");
  return orbits;
}

std::vector<FormEntry> parse_entry_list(const std::string& text, const std::string& what) {
  std::vector<FormEntry> entries;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    try {
      entries.push_back(FormEntry::parse(tok));
    } catch (const error& e) {
      throw parse_error(what + ": " + e.what());
    }
  }
  if (entries.empty()) throw parse_error(what + ": empty entry list");
  return entries;
}

}  // namespace

IndexFile parse_index_file(const std::string& text) {
  std::map<std::string, std::string> keys;
  std::vector<std::string> kappas;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t sp = line.find_first_of(" \t");
    if (sp == std::string::npos)
      throw parse_error("line " + std::to_string(lineno) + ": expected 'key value'");
    std::string key = line.substr(0, sp);
    std::string value = trim(line.substr(sp + 1));
    if (key == "kappa") {
      kappas.push_back(value);
      continue;
    }
    static const std::set<std::string> known{"type", "orbits", "circled", "a", "subalgebra", "q0"};
    if (!known.count(key))
      throw parse_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!keys.insert({key, value}).second)
      throw parse_error("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }

  if (!keys.count("type")) throw parse_error("missing key 'type'");
  RootSystem rs = [&] {
    try {
      return RootSystem::build(keys.at("type"));
    } catch (const error& e) {
      throw parse_error(std::string("type: ") + e.what());
    }
  }();

  if (!keys.count("circled")) throw parse_error("missing key 'circled'");
  std::vector<int> circled = parse_vertex_list(keys.at("circled"), "circled");

  std::optional<FormEntry> a;
  if (keys.count("a")) {
    std::string v = keys.at("a");
    try {
      if (v.rfind("sym:", 0) == 0)
        a = FormEntry::symbol(v.substr(4));
      else
        a = FormEntry::from_rational(Rat(v));
    } catch (const std::exception& e) {
      throw parse_error(std::string("a: ") + e.what());
    }
  }

  IndexFile f;
  if (keys.count("orbits")) {
    if (!a) throw parse_error("key 'a' is required when orbits are present");
    std::vector<std::vector<int>> orbits = parse_orbits(keys.at("orbits"));
    // circled vertices must cover whole orbits; collect them
    std::set<int> cset(circled.begin(), circled.end());
    std::vector<std::vector<int>> circled_orbits;
    std::set<int> claimed;
    for (auto o : orbits) {
      std::sort(o.begin(), o.end());
      size_t in = 0;
      for (int v : o) in += cset.count(v);
      if (in == o.size()) {
        circled_orbits.push_back(o);
        for (int v : o) claimed.insert(v);
      } else if (in != 0) {
        throw parse_error("circled: only part of orbit (" + std::to_string(o[0]) + " " +
                          std::to_string(o[1]) + ") is circled");
      }
    }
    for (int v : circled)
      if (!claimed.count(v)) circled_orbits.push_back({v}), claimed.insert(v);
    try {
      f.index = TitsIndex::outer(rs, orbits, circled_orbits, *a);
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  } else {
    if (a) throw parse_error("key 'a' requires key 'orbits'");
    f.index = TitsIndex::inner(rs, circled);
  }

  if (!keys.count("subalgebra")) throw parse_error("missing key 'subalgebra'");
  f.spec.delta_prime = parse_vertex_list(keys.at("subalgebra"), "subalgebra");

  if (keys.count("q0")) {
    std::string v = keys.at("q0");
    if (v == "sym")
      f.q0 = symbolic_q0();
    else if (v == "pfister:sym")
      f.q0 = symbolic_pfister_q0();
    else if (v.rfind("pfister:", 0) == 0) {
      auto gens = parse_entry_list(v.substr(8), "q0");
      if (gens.size() != 3) throw parse_error("q0: pfister needs exactly 3 generators");
      f.q0 = pfister_pure(gens);
    } else
      f.q0 = QuadForm(parse_entry_list(v, "q0"));
    if (f.q0->dim() != 7) throw parse_error("q0 must have dimension 7");
  }

  std::vector<Component> comps = subsystem_components(rs, f.spec.delta_prime);
  if (kappas.size() != comps.size())
    throw parse_error("expected " + std::to_string(comps.size()) + " kappa line(s) for " +
                      std::to_string(comps.size()) + " component(s), got " +
                      std::to_string(kappas.size()));
  for (size_t i = 0; i < kappas.size(); ++i) {
    const std::string& v = kappas[i];
    if (v == "auto") {
      f.spec.kappas.push_back(
          split_killing_form(RootSystem::build(comps[i].family, comps[i].rank)));
    } else if (v.rfind("so_of_q:", 0) == 0) {
      QuadForm q(parse_entry_list(v.substr(8), "kappa so_of_q"));
      try {
        f.spec.kappas.push_back(killing_of_so(q));
      } catch (const error& e) {
        throw parse_error(std::string("kappa: ") + e.what());
      }
    } else {
      try {
        f.spec.kappas.push_back(QuadForm::parse(v));
      } catch (const error& e) {
        throw parse_error(std::string("kappa: ") + e.what());
      }
    }
  }
  return f;
}

IndexFile load_index_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_index_file(ss.str());
}

std::optional<CatalogCase> infer_catalog_case(const IndexFile& f) {
  const RootSystem& rs = f.index.rs;
  std::vector<int> dp = f.spec.delta_prime;
  std::sort(dp.begin(), dp.end());
  bool inner = f.index.is_inner();
  if (rs.family() == Family::E && rs.rank() == 6) {
    if (inner) {
      if (dp.empty()) return CatalogCase::E6Split;
      if (dp == std::vector<int>{2, 3, 4, 5} && f.q0) return CatalogCase::E6D4;
    } else {
      if (dp.empty()) return CatalogCase::E6TwoQuasiSplit;
      if (dp == std::vector<int>{2, 3, 4, 5} && f.q0) return CatalogCase::E6TwoD4;
    }
  }
  if (rs.family() == Family::E && rs.rank() == 7 && inner) {
    if (dp.empty()) return CatalogCase::E7Split;
    if (dp == std::vector<int>{1, 2, 3, 4, 5, 6} && f.q0) return CatalogCase::E7E6;
  }
  return std::nullopt;
}

std::string Report::render(bool machine) const {
  std::string out;
  for (const auto& [k, v] : lines) {
    out += k;
    out += machine ? "=" : ": ";
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace kf
