#include "json_out.hpp"

#include "slagforge/parallel.hpp"
#include "slagforge/property.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace slagforge::cli {
namespace {

struct Options {
  bool json = false;
  std::string model_file;
  std::string tau_mode;
};

Options opt;

std::optional<Rational> parse_tau_mode(const std::string& s) {
  if (s == "generic") return std::nullopt;
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("--tau-mode takes a rational q or \"generic\", got \"" + s + "\"");
  }
}

ModelManifold load(const std::string& name) {
  ModelManifold m;
  if (!opt.model_file.empty() && (name.empty() || name == opt.model_file)) {
    std::ifstream in(opt.model_file);
    if (!in) throw ParseError("cannot read model file " + opt.model_file);
    std::stringstream ss;
    ss << in.rdbuf();
    m = ModelManifold::from_text(ss.str());
  } else {
    if (name.empty()) throw ParseError("no model given");
    m = builtin(name);
  }
  if (!opt.tau_mode.empty()) m = with_tau_mode(m, parse_tau_mode(opt.tau_mode));
  return m;
}

void emit(const std::string& command, const json& result, const std::string& text) {
  if (opt.json) {
    json out{{"version", kSchema}, {"command", command}, {"result", result}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------------- model

void model_show(const std::string& name) {
  ModelManifold m = load(name);
  std::ostringstream os;
  os << m.name << " (dim " << m.dim << (m.is_complex() ? ", complex" : "") << (m.is_symplectic() ? ", symplectic" : "")
     << ")\n\n";
  os << structure_equations(m) << "\n";
  os << "brackets:\n";
  for (auto& [ij, v] : brackets(m)) os << "  " << bracket_string(m, ij.first, ij.second) << "\n";
  os << "\nω = " << m.omega.str(m.direction_names) << "\n";
  os << "Ω = " << m.Omega.str(m.direction_names) << "\n";
  if (m.lattice.present) os << "lattice: " << m.lattice.tau.describe() << "\n";
  if (!m.foliations.empty()) {
    os << "foliations:";
    for (auto& f : m.foliations) os << " " << f.id << (f.section ? "*" : "");
    os << "\n";
  }
  os << "\nconsistency:\n";
  for (auto& c : consistency_report(m).checks)
    os << "  " << (c.pass ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  emit("model show", model_json(m), os.str());
}

void model_list() {
  std::ostringstream os;
  for (auto& n : builtin_names()) os << n << "\n";
  emit("model list", builtin_names(), os.str());
}

// -------------------------------------------------------------------- slag

void slag_scan(const std::string& name, const std::string& phase) {
  ModelManifold m = load(name);
  Phase p = parse_phase(phase);
  auto hits = scan_axis(m, p);
  std::ostringstream os;
  os << "SLag axis distributions on " << m.name << " at phase " << phase_name(p) << "\n";
  os << "  triple  involutive  witness\n";
  json rows = json::array();
  for (auto& h : hits) {
    os << "  " << std::left << std::setw(8) << triple_name(h.triple) << std::setw(12)
       << (h.involutivity.involutive ? "yes" : "no") << h.involutivity.witness_text << "\n";
    rows.push_back({{"triple", triple_name(h.triple)},
                    {"involutive", h.involutivity.involutive},
                    {"witness", h.involutivity.witness_text}});
  }
  emit("slag scan", {{"model", m.name}, {"phase", phase_name(p)}, {"hits", rows}}, os.str());
}

void slag_system(const std::string& name, const std::string& phase) {
  ModelManifold m = load(name);
  SlagSystem s = build_system(m, parse_phase(phase));
  emit("slag system", to_json(s), s.str());
}

void slag_check(const std::string& name, const std::string& phase, const std::string& matrix_file) {
  ModelManifold m = load(name);
  Phase p = parse_phase(phase);
  DistributionMatrix a = DistributionMatrix::parse(read_file(matrix_file));
  Residuals r = eval_direct(m, p, a);
  std::ostringstream os;
  json vals = json::array();
  const char* labels[4] = {"ω(v1,v2)", "ω(v1,v3)", "ω(v2,v3)", "calibration"};
  for (int k = 0; k < 4; ++k) {
    os << "  " << labels[k] << " = " << r.values[k].str() << "\n";
    vals.push_back(r.values[k].str());
  }
  os << (r.degenerate ? "degenerate: rank below 3\n" : r.zero() ? "special Lagrangian\n" : "not special Lagrangian\n");
  emit("slag check", {{"residuals", vals}, {"degenerate", r.degenerate}, {"slag", r.zero() && !r.degenerate}}, os.str());
}

// ------------------------------------------------------------------ deform

void deform_cmd(const std::string& what, const std::string& name, const std::string& triple, bool signed_j) {
  ModelManifold m = load(name);
  auto t = parse_triple(triple);
  if (what == "betti") {
    int b = leaf_betti1(m, t);
    emit("deform betti", {{"triple", triple_name(t)}, {"b1", b}}, "b1(L" + triple_name(t) + ") = " + std::to_string(b));
    return;
  }
  DeformSystem s = generate(m, t, signed_j);
  if (what == "system") {
    emit("deform system", to_json(s), s.str());
    return;
  }
  InvariantSolutions sol = invariant_solution_dim(s);
  json basis = json::array();
  std::ostringstream os;
  os << "invariant deformations of L" << triple_name(t) << ": " << sol.dim << "\n";
  for (auto& v : sol.basis) {
    json row = json::array();
    os << " ";
    for (auto& c : v) {
      row.push_back(c.str());
      os << " " << c.str();
    }
    os << "\n";
    basis.push_back(row);
  }
  emit("deform dim", {{"triple", triple_name(t)}, {"dim", sol.dim}, {"basis", basis}}, os.str());
}

// ----------------------------------------------------------------- lattice

void lattice_classify(const std::string& name, const std::string& fol) {
  ModelManifold m = load(name);
  ClosureVerdict v = classify_leaf_closure(m, fol);
  emit("lattice classify", to_json(v), fol + ": " + v.str());
}

void lattice_eigen(const std::string& mat) {
  EigenData e = eigen_data(parse_int_mat2(mat));
  long tr = e.M[0][0] + e.M[1][1];
  long disc = tr * tr - 4;
  std::ostringstream os;
  os << "Tr² - 4 = " << disc << (e.discriminant.perfect_square ? " (square)" : " (not a square)") << "\n";
  os << "e^λ  = " << e.expanding.str() << "\n";
  os << "e^-λ = " << e.contracting.str() << "\n";
  os << "P    = " << str(e.P) << "\n";
  BundleCheck b = verify_lattice_bundle(e.M, e.P);
  os << "bundle: " << (b.ok ? "ok" : "fails") << " (" << b.detail << ")\n";
  emit("lattice eigen",
       {{"M", to_json(e.M)},
        {"discriminant", disc},
        {"square", e.discriminant.perfect_square},
        {"expanding", e.expanding.str()},
        {"contracting", e.contracting.str()},
        {"P", to_json(e.P)},
        {"irrational", e.irrational},
        {"bundle_ok", b.ok}},
       os.str());
}

void lattice_search(const std::string& mat, int bound) {
  SearchResult s = diag_integer_matrix_search(parse_int_mat2(mat), bound);
  std::ostringstream os;
  os << s.candidates << " columns examined up to bound " << bound << ": ";
  json out{{"bound", bound}, {"candidates", s.candidates}};
  if (s.witness) {
    os << "witness " << str(to_quad(*s.witness)) << "\n";
    out["witness"] = to_json(*s.witness);
  } else {
    os << "no witness\n";
    out["witness"] = nullptr;
  }
  emit("lattice search-mprime", out, os.str());
}

// -------------------------------------------------------------- cohomology

void cohomology_cmd(const std::string& what, const std::string& name) {
  ModelManifold m = load(name);
  if (what == "h10") {
    int h = dolbeault_h10(m);
    std::string tau = m.lattice.present ? m.lattice.tau.describe() : "no lattice";
    emit("cohomology h10", {{"model", m.name}, {"h10", h}, {"tau", tau}},
         "h^{1,0}(" + m.name + ") = " + std::to_string(h) + "   [" + tau + "]");
    return;
  }
  CohomologyTable t = what == "derham"      ? de_rham(m)
                      : what == "bottchern" ? refined_bott_chern(m)
                                            : refined_tseng_yau(m);
  emit("cohomology " + what, to_json(t, m), t.str(m));
}

void mirror_check(const std::string& x, const std::string& x_check) {
  ModelManifold a = load(x), b = load(x_check);
  DiamondCheck dc = mirror_diamond_check(a, b);
  std::ostringstream os;
  os << "h_TY^{p,q}(" << a.name << ") = h_BC^{3-p,q}(" << b.name << "): " << (dc.pass ? "pass" : "fail") << "\n";
  for (auto& s : dc.mismatches) os << "  " << s << "\n";
  os << "\n" << dc.tseng_yau.str(a) << "\n" << dc.bott_chern.str(b);
  emit("cohomology mirror-check",
       {{"pass", dc.pass}, {"mismatches", dc.mismatches}, {"tseng_yau", to_json(dc.tseng_yau, a)},
        {"bott_chern", to_json(dc.bott_chern, b)}},
       os.str());
}

// ------------------------------------------------------------------ mirror

void mirror_ft(const std::string& name, const std::string& form) {
  ModelManifold m = load(name);
  FormContext flat;
  flat.dim = kFlatDim;
  flat.directions = {"r0"};
  WeightedForm out = form.empty() ? mirror_omega_flat(m) : fourier_mukai(parse_form(form, flat), m);
  std::ostringstream os;
  os << "FT = " << (out.is_zero() ? "0" : out.str({"r0"})) << "\n";
  json res{{"flat", to_json(out, {"r0"})}};
  if (m.flat.dictionary.size() == 6 && !m.flat.dual_name.empty()) {
    ModelManifold dual = builtin(m.flat.dual_name);
    WeightedForm psi = transport(out, m, dual);
    os << "on " << dual.name << ": " << (psi.is_zero() ? "0" : psi.str(dual.direction_names)) << "\n";
    res["transported"] = to_json(psi, dual.direction_names);
    res["dual"] = dual.name;
  }
  emit("mirror ft", res, os.str());
}

void mirror_dual(const std::string& name, const std::string& fol) {
  ModelManifold m = load(name);
  MirrorPair p = dual_model(m, fol);
  std::ostringstream os;
  os << m.name << " along " << fol << " -> " << p.dual.name << "\n";
  os << "  dual τ: " << p.dual.lattice.tau.describe() << "\n";
  os << "  fiber lattice rows: " << str(p.fiber_lattice) << "\n";
  os << "  dual lattice rows:  " << str(p.dual_lattice) << "\n";
  if (!p.dictionary.empty()) {
    os << "  dictionary:\n";
    const char* flat_names[9] = {"dθ̌0", "dθ̌1", "dθ̌2", "dθ0", "dθ1", "dθ2", "dr0", "dr1", "dr2"};
    for (auto& [g, f] : p.dictionary) os << "    " << flat_names[g] << " -> " << f.str(m.direction_names) << "\n";
  }
  os << "  ω transported: " << (p.omega_transported ? "yes" : "no") << "\n";
  if (p.Omega_transported) os << "  Ω transported: " << (*p.Omega_transported ? "yes" : "no") << "\n";
  emit("mirror dual", to_json(p, m), os.str());
}

void mirror_susy(const std::string& name, const std::string& type) {
  ModelManifold m = load(name);
  SusyReport r = susy_check(m, parse_susy_type(type));
  emit("mirror susy", to_json(r, m), r.str(m));
}

// ------------------------------------------------------------- paper-suite

int paper_suite(size_t instances, uint64_t seed, bool verbose) {
  json rows = json::array();
  std::ostringstream os;
  bool all = true;
  for (int id = 1; id <= kCriteria; ++id) {
    CriterionResult r = run_criterion(id, instances, seed);
    all = all && r.pass;
    rows.push_back(to_json(r));
    os << (r.pass ? "PASS " : "FAIL ") << std::setw(2) << r.id << "  " << r.title << "\n";
    for (auto& d : r.details)
      if (verbose || d.rfind("FAIL", 0) == 0) os << "        " << d << "\n";
  }
  emit("paper-suite", {{"pass", all}, {"criteria", rows}}, os.str());
  return all ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"slagforge: special Lagrangians and semi-flat mirrors on solvmanifolds"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--model-file", opt.model_file, "declarative model file used in place of a builtin");
  app.add_option("--tau-mode", opt.tau_mode, "override q in τ·unit = 2πq (rational or \"generic\")");
  int code = 0;

  std::string name, name2, phase = "0", triple, fol, mat = "2,3,1,2", form, type = "IIB", matrix_file;

  auto model = app.add_subcommand("model", "inspect models");
  model->require_subcommand(1);
  auto show = model->add_subcommand("show", "structure equations, brackets and consistency checks");
  show->add_option("model", name);
  show->callback([&] { model_show(name); });
  model->add_subcommand("list", "builtin model names")->callback(model_list);

  auto slag = app.add_subcommand("slag", "special Lagrangian distributions");
  slag->require_subcommand(1);
  auto scan = slag->add_subcommand("scan", "axis-aligned SLag distributions");
  scan->add_option("model", name);
  scan->add_option("--phase", phase, "0 or -pi/2");
  scan->callback([&] { slag_scan(name, phase); });
  auto system = slag->add_subcommand("system", "polynomial SLag conditions on a generic distribution");
  system->add_option("model", name);
  system->add_option("--phase", phase, "0 or -pi/2");
  system->callback([&] { slag_system(name, phase); });
  auto check = slag->add_subcommand("check", "evaluate the conditions on a given distribution");
  check->add_option("model", name);
  check->add_option("--phase", phase, "0 or -pi/2");
  check->add_option("--matrix", matrix_file, "3 lines of 6 scalar expressions")->required();
  check->callback([&] { slag_check(name, phase, matrix_file); });

  auto deform = app.add_subcommand("deform", "deformations of SLag foliations");
  deform->require_subcommand(1);
  bool signed_j = false;
  for (const char* what : {"system", "dim", "betti"}) {
    auto sub = deform->add_subcommand(what);
    sub->add_option("model", name)->required();
    sub->add_option("triple", triple)->required();
    sub->add_flag("--signed-j", signed_j, "take Jα* with the signs of J");
    sub->callback([&, what] { deform_cmd(what, name, triple, signed_j); });
  }

  auto lattice = app.add_subcommand("lattice", "lattices, eigen data and leaf closures");
  lattice->require_subcommand(1);
  auto classify = lattice->add_subcommand("classify", "closure of the leaves of a foliation");
  classify->add_option("model", name)->required();
  classify->add_option("foliation", fol)->required();
  classify->callback([&] { lattice_classify(name, fol); });
  auto eigen = lattice->add_subcommand("eigen", "exact eigen data of an integer 2x2 matrix");
  eigen->add_option("matrix", mat, "m11,m12,m21,m22");
  eigen->callback([&] { lattice_eigen(mat); });
  int bound = 50;
  auto search = lattice->add_subcommand("search-mprime", "search integer M' with P M' diagonal");
  search->add_option("--bound", bound)->check(CLI::PositiveNumber);
  search->add_option("--matrix", mat, "m11,m12,m21,m22");
  search->callback([&] { lattice_search(mat, bound); });

  auto coh = app.add_subcommand("cohomology", "invariant cohomology tables");
  coh->require_subcommand(1);
  for (const char* what : {"derham", "h10", "bottchern", "tsengyau"}) {
    auto sub = coh->add_subcommand(what);
    sub->add_option("model", name);
    sub->callback([&, what] { cohomology_cmd(what, name); });
  }
  auto mc = coh->add_subcommand("mirror-check", "compare the Tseng-Yau diamond with the mirror's Bott-Chern diamond");
  mc->add_option("X", name)->required();
  mc->add_option("Xcheck", name2)->required();
  mc->callback([&] { mirror_check(name, name2); });

  auto mirror = app.add_subcommand("mirror", "semi-flat mirror construction");
  mirror->require_subcommand(1);
  auto ft = mirror->add_subcommand("ft", "Fourier-Mukai transform on the flat torus bundle");
  ft->add_option("model", name);
  ft->add_option("--form", form, "flat form literal; defaults to e^{2ω̌}");
  ft->callback([&] { mirror_ft(name, form); });
  auto dual = mirror->add_subcommand("dual", "mirror model along a fibration with section");
  dual->add_option("model", name)->required();
  dual->add_option("foliation", fol)->required();
  dual->callback([&] { mirror_dual(name, fol); });
  auto susy = mirror->add_subcommand("susy", "Type IIA/IIB supersymmetry system");
  susy->add_option("model", name);
  susy->add_option("--type", type, "IIA or IIB");
  susy->callback([&] { mirror_susy(name, type); });

  size_t instances = 500;
  uint64_t seed = 20240611;
  bool verbose = false;
  auto suite = app.add_subcommand("paper-suite", "run every acceptance criterion");
  suite->add_option("--instances", instances, "randomized instances per property suite");
  suite->add_option("--seed", seed);
  suite->add_flag("-v,--verbose", verbose, "print every sub-check");
  suite->callback([&] { code = paper_suite(instances, seed, verbose); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return code;
}

}  // namespace
}  // namespace slagforge::cli

int main(int argc, char** argv) {
  using namespace slagforge;
  try {
    return cli::run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedScalar& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateForm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
