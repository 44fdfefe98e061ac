// Command-line front end: compute / oracle / catalog / signature / grade.
// Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 validation
// error, 4 assembly error.

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "kf/chevalley.hpp"
#include "kf/indexfile.hpp"
#include "kf/killing.hpp"

using namespace kf;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitAssembly = 4;

struct verification_failed : std::exception {};
struct validation_failed : error {
  using error::error;
};

std::vector<Rat> instantiation_pool() {
  return {Rat(2), Rat(3), Rat(5), Rat(7), Rat(-2), Rat(-5), Rat(11), Rat(-1), Rat(13), Rat(-7)};
}

std::set<std::string> collect_symbols(const QuadForm& q) {
  std::set<std::string> syms;
  for (const auto& e : q.entries()) syms.insert(e.symbols.begin(), e.symbols.end());
  return syms;
}

void add_form_lines(Report& rep, const KillingFormResult& r) {
  rep.add("form", r.total.str());
  rep.add("dim", std::to_string(r.total.dim()));
  for (size_t i = 0; i < r.terms.size(); ++i) {
    std::string p = "term[" + std::to_string(i) + "].";
    rep.add(p + "label", r.terms[i].label);
    rep.add(p + "scalar", r.terms[i].scalar.str());
    rep.add(p + "form", r.terms[i].form.str());
    rep.add(p + "dim", std::to_string(r.terms[i].form.dim()));
  }
  rep.add("hyperbolic", std::to_string(r.hyperbolic));
  if (!r.total.has_symbols())
    rep.add("signature", std::to_string(signature_numeric(r.total)));
}

int cmd_compute(const std::string& path, bool verify_flag, long trials, bool machine) {
  IndexFile f = load_index_file(path);
  auto violations = validate(f.index);
  if (!violations.empty()) {
    std::string msg = "invalid index:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw validation_failed(msg);
  }
  KillingFormResult result = assemble(f.index, f.spec);
  Report rep;
  rep.add("type", f.index.rs.name());
  add_form_lines(rep, result);

  bool all_pass = true;
  if (verify_flag) {
    std::optional<CatalogCase> cat = infer_catalog_case(f);
    CatalogParams params;
    params.q0 = f.q0;
    params.a = f.index.extension_param;
    std::set<std::string> syms = collect_symbols(result.total);
    if (f.q0) {
      auto qs = collect_symbols(*f.q0);
      syms.insert(qs.begin(), qs.end());
    }
    std::vector<std::map<std::string, Rat>> draws;
    if (syms.empty()) {
      draws.push_back({});
    } else {
      std::mt19937_64 rng(20260810);
      auto pool = instantiation_pool();
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      std::vector<Rat> a_sweep{Rat(-1), Rat(2), Rat(3), Rat(-7)};
      for (long t = 0; t < trials; ++t) {
        std::map<std::string, Rat> inst;
        for (const auto& s : syms) inst[s] = pool[pick(rng)];
        if (syms.count("a")) inst["a"] = a_sweep[t % a_sweep.size()];
        draws.push_back(std::move(inst));
      }
    }
    size_t ci = 0;
    for (size_t d = 0; d < draws.size(); ++d) {
      VerifyReport vr = verify(f.index, f.spec, draws[d], cat, params);
      for (const auto& c : vr.checks) {
        std::string p = "check[" + std::to_string(ci++) + "].";
        rep.add(p + "name", c.name + (draws.size() > 1 ? "/trial" + std::to_string(d) : ""));
        rep.add(p + "status", c.pass ? "pass" : "fail");
        if (!c.pass && !c.detail.empty()) rep.add(p + "detail", c.detail);
        all_pass &= c.pass;
      }
    }
  }
  std::cout << rep.render(machine);
  if (!all_pass) throw verification_failed{};
  return 0;
}

Vec parse_torus_element(const ChevalleyAlgebra& alg, const std::string& tok) {
  const RootSystem& rs = alg.root_system();
  size_t w = tok.find('w');
  if (w != std::string::npos) {
    long mult;
    int vertex;
    try {
      mult = std::stol(tok.substr(0, w));
      vertex = std::stoi(tok.substr(w + 1));
    } catch (const std::exception&) {
      throw parse_error("bad torus element '" + tok + "' (want e.g. 3w1 or a2)");
    }
    if (vertex < 1 || vertex > rs.rank())
      throw validation_failed("vertex out of range in '" + tok + "'");
    CoweightElement cw = rs.coweight(vertex);
    // rescale c*coweight to mult*coweight; must stay in the coroot lattice
    std::vector<Rat> t;
    for (const Int& x : cw.coeffs) {
      Rat v = Rat(x) * Rat(mult) / Rat(cw.c);
      if (v.get_den() != 1)
        throw validation_failed("'" + tok + "' does not lie in the coroot lattice (use " +
                                cw.c.get_str() + "w" + std::to_string(vertex) + ")");
      t.push_back(v);
    }
    return alg.torus_element(t);
  }
  if (tok.size() >= 2 && tok[0] == 'a') {
    int vertex = 0;
    try {
      vertex = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw parse_error("bad torus element '" + tok + "'");
    }
    if (vertex < 1 || vertex > rs.rank())
      throw validation_failed("vertex out of range in '" + tok + "'");
    std::vector<Rat> t(rs.rank(), Rat(0));
    t[vertex - 1] = 1;
    return alg.torus_element(t);
  }
  throw parse_error("bad torus element '" + tok + "' (want e.g. 3w1 or a2)");
}

int cmd_oracle(const std::string& type, const std::vector<std::string>& elems, bool full,
               bool machine) {
  RootSystem rs = [&] {
    try {
      return RootSystem::build(type);
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  }();
  if (rs.rank() > 8) throw validation_failed("oracle supports rank <= 8");
  ChevalleyAlgebra alg = build_chevalley(rs);
  Report rep;
  rep.add("type", rs.name());
  rep.add("dim", std::to_string(alg.dim()));
  if (elems.size() == 2) {
    Vec v = parse_torus_element(alg, elems[0]);
    Vec w = parse_torus_element(alg, elems[1]);
    rep.add("trace", alg.trace_form(v, w).get_str());
  } else if (!elems.empty()) {
    throw parse_error("oracle expects exactly two torus elements (or none with --full)");
  }
  if (full) {
    GramMatrix g = alg.killing_gram_split();
    for (size_t i = 0; i < g.size(); ++i) {
      std::string row;
      for (size_t j = 0; j < g.size(); ++j) {
        if (j) row += ' ';
        row += g(i, j).get_str();
      }
      rep.add("gram[" + std::to_string(i + 1) + "]", row);
    }
    rep.add("diag", diagonalize(g).str());
  }
  std::cout << rep.render(machine);
  return 0;
}

QuadForm parse_form_option(const std::string& v, const std::string& what) {
  if (v == "sym") {
    if (what == "q0") return symbolic_q0();
    throw parse_error(what + ": 'sym' shorthand is only defined for q0");
  }
  if (v == "pfister:sym") {
    if (what == "q0") return symbolic_pfister_q0();
    if (what == "q3") return pfister({FormEntry::symbol("g1"), FormEntry::symbol("g2"),
                                      FormEntry::symbol("g3")});
    if (what == "q5")
      return pfister({FormEntry::symbol("g1"), FormEntry::symbol("g2"),
                      FormEntry::symbol("g3"), FormEntry::symbol("g4"),
                      FormEntry::symbol("g5")});
  }
  if (v.rfind("pfister:", 0) == 0) {
    std::vector<FormEntry> gens;
    std::stringstream ss(v.substr(8));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        gens.push_back(FormEntry::parse(tok));
      } catch (const error& e) {
        throw parse_error(what + ": " + e.what());
      }
    }
    QuadForm p = pfister(gens);
    return what == "q0" ? pfister_pure(gens) : p;
  }
  try {
    return QuadForm::parse(v);
  } catch (const error& e) {
    throw parse_error(what + ": " + e.what());
  }
}

int cmd_catalog(const std::string& case_name, const std::string& q0, const std::string& a,
                const std::string& q3, const std::string& q5, bool machine) {
  CatalogCase c = [&] {
    try {
      return catalog_case_from_string(case_name);
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  }();
  CatalogParams params;
  if (!q0.empty()) params.q0 = parse_form_option(q0, "q0");
  if (!q3.empty()) params.q3 = parse_form_option(q3, "q3");
  if (!q5.empty()) params.q5 = parse_form_option(q5, "q5");
  if (!a.empty()) {
    try {
      if (a.rfind("sym:", 0) == 0)
        params.a = FormEntry::symbol(a.substr(4));
      else
        params.a = FormEntry::from_rational(Rat(a));
    } catch (const std::exception& e) {
      throw parse_error(std::string("a: ") + e.what());
    }
  }
  QuadForm result = [&] {
    try {
      return catalog(c, params);
    } catch (const error& e) {
      throw validation_failed(e.what());
    }
  }();
  Report rep;
  rep.add("case", catalog_case_name(c));
  rep.add("form", result.str());
  rep.add("dim", std::to_string(result.dim()));
  if (!result.has_symbols()) rep.add("signature", std::to_string(signature_numeric(result)));
  std::cout << rep.render(machine);
  return 0;
}

int cmd_signature(const std::string& path, bool machine) {
  IndexFile f = load_index_file(path);
  auto violations = validate(f.index);
  if (!violations.empty()) {
    std::string msg = "invalid index:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw validation_failed(msg);
  }
  Report rep;
  rep.add("signature", std::to_string(real_signature(f.index)));
  std::cout << rep.render(machine);
  return 0;
}

int cmd_grade(const std::string& type, const std::string& jlist, bool machine) {
  RootSystem rs = [&] {
    try {
      return RootSystem::build(type);
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  }();
  std::vector<int> J;
  std::stringstream ss(jlist);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("--J: bad vertex '" + tok + "'");
    int v = std::stoi(tok);
    if (v < 1 || v > rs.rank()) throw validation_failed("--J: vertex out of range");
    J.push_back(v);
  }
  Grading g = grade(rs, J);
  Report rep;
  rep.add("type", rs.name());
  rep.add("level0", std::to_string(g.level0_count));
  size_t bi = 0;
  for (const auto& [level, buckets] : g.levels)
    for (const auto& b : buckets) {
      std::string p = "bucket[" + std::to_string(bi++) + "].";
      rep.add(p + "level", std::to_string(level));
      rep.add(p + "shape", Root{b.shape}.str());
      rep.add(p + "count", std::to_string(b.roots.size()));
      rep.add(p + "minimal", b.minimal.str());
      std::vector<Rat> hw = restrict_weight(rs, g.J, b.minimal);
      std::string hws;
      for (size_t k = 0; k < g.J.size(); ++k) {
        if (k) hws += ',';
        hws += "w" + std::to_string(g.J[k]) + "=" + hw[k].get_str();
      }
      rep.add(p + "hw", hws.empty() ? "-" : hws);
      rep.add(p + "dim", weyl_dim(rs, g.J, hw).get_str());
    }
  std::cout << rep.render(machine);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Killing forms of isotropic simple Lie algebras from Tits-index data"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "emit strict key=value output");

  auto* compute = app.add_subcommand("compute", "assemble the Killing form from an index file");
  std::string compute_path;
  bool verify_flag = false;
  long trials = 5;
  compute->add_option("file", compute_path, "index file")->required();
  compute->add_flag("--verify", verify_flag,
                    "cross-check formula routes, the oracle and the catalog");
  compute->add_option("--trials", trials, "numeric instantiations used by --verify");

  auto* oracle = app.add_subcommand("oracle", "brute-force Chevalley trace forms");
  std::string oracle_type;
  std::vector<std::string> oracle_elems;
  bool full = false;
  oracle->add_option("type", oracle_type, "simple type, e.g. E6")->required();
  oracle->add_option("elements", oracle_elems, "two torus elements, e.g. 3w1 3w6");
  oracle->add_flag("--full", full, "print the Cartan Gram matrix and its diagonalization");

  auto* cat = app.add_subcommand("catalog", "closed-form Killing forms from the tables");
  std::string case_name, q0_opt, a_opt, q3_opt, q5_opt;
  cat->add_option("case", case_name,
                  "split-G2|G2|F4|1E6-split|1E6-D4|2E6-quasisplit|2E6-D4|E7-split|E7-E6")
      ->required();
  cat->add_option("--q0", q0_opt, "sym | pfister:sym | pfister:<g1,g2,g3> | entries");
  cat->add_option("--a", a_opt, "integer or sym:<name>");
  cat->add_option("--q3", q3_opt, "3-fold Pfister invariant");
  cat->add_option("--q5", q5_opt, "5-fold Pfister invariant");

  auto* sig = app.add_subcommand("signature", "real signature from the Tits index");
  std::string sig_path;
  sig->add_option("file", sig_path, "index file")->required();

  auto* gr = app.add_subcommand("grade", "level/shape grading of the positive roots");
  std::string grade_type, grade_j;
  gr->add_option("type", grade_type, "simple type")->required();
  gr->add_option("--J", grade_j, "comma-separated vertex subset")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(compute))
      return cmd_compute(compute_path, verify_flag, trials, machine);
    if (app.got_subcommand(oracle)) return cmd_oracle(oracle_type, oracle_elems, full, machine);
    if (app.got_subcommand(cat))
      return cmd_catalog(case_name, q0_opt, a_opt, q3_opt, q5_opt, machine);
    if (app.got_subcommand(sig)) return cmd_signature(sig_path, machine);
    if (app.got_subcommand(gr)) return cmd_grade(grade_type, grade_j, machine);
  } catch (const verification_failed&) {
    std::cerr << "verification failed\n";
    return kExitVerify;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const validation_failed& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const error& e) {
    std::cerr << "assembly error: " << e.what() << "\n";
    return kExitAssembly;
  }
  return 0;
}
