#include "hpseudo/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "hpseudo/pseudo.hpp"

namespace hp {

namespace {

struct Context {
  std::string file;
  LieAlgebraSpec spec;
  std::shared_ptr<const Hopf> H;
  DPrimeModule pi;
  bool pi_given = false;
  std::string pi_file;
  SpRep U;
  std::string u_name;
  int lattice_n = -1;  // n for U = R(π_n), −1 otherwise
  int cap = 4;
  int jet_order = 4;
  std::string prefix;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Q json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Q(v.get<long>());
  throw ParseError("matrix entries must be integers or \"p/q\" strings");
}

Matrix json_matrix(const Json& v, int rows, int cols) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) throw ParseError("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols)
      throw ParseError("matrix has the wrong number of columns");
    for (int j = 0; j < cols; ++j) m(i, j) = json_rational(v[i][j]);
  }
  return m;
}

std::vector<Matrix> json_matrices(const Json& v, size_t count, int rows, int cols, const std::string& what) {
  if (!v.is_array() || v.size() != count)
    throw ParseError(what + ": expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (const auto& m : v) out.push_back(json_matrix(m, rows, cols));
  return out;
}

DPrimeModule load_pi_module(const std::string& path, const LieAlgebraSpec& s) {
  Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(path + ": missing integer 'dim'");
  DPrimeModule p;
  p.dim = j["dim"].get<int>();
  if (p.dim < 1) throw ParseError(path + ": dim must be positive");
  p.act = json_matrices(j.value("act", Json::array()), s.dim, p.dim, p.dim, path + ": act");
  if (j.contains("lambda")) p.lambda = json_rational(j["lambda"]);
  return p;
}

SpRep load_sp_rep(const std::string& sel, const LieAlgebraSpec& s, int& lattice_n) {
  if (sel.rfind("pi:", 0) == 0) {
    int n = -1;
    try {
      size_t used = 0;
      n = std::stoi(sel.substr(3), &used);
      if (used != sel.size() - 3) n = -1;
    } catch (const std::exception&) {
    }
    if (n < 0 || n > s.N()) throw ParseError("--sp-rep: n in pi:n must lie in 0.." + std::to_string(s.N()));
    lattice_n = n;
    return build_fundamental_rep(s, n);
  }
  if (sel == "sym2") return sym2_rep(s);
  Json j = read_json_file(sel);
  const size_t slots = static_cast<size_t>(s.dim) * (s.dim + 1) / 2;
  std::string label = j.value("label", std::filesystem::path(sel).stem().string());
  int dim = j.value("dim", 0);
  if (dim < 1) throw ParseError(sel + ": missing positive 'dim'");
  SpRep r;
  if (j.contains("f")) {
    r = rep_from_f(s, json_matrices(j["f"], slots, dim, dim, sel + ": f"), label);
  } else if (j.contains("gl")) {
    r = rep_from_gl(s, json_matrices(j["gl"], static_cast<size_t>(s.dim) * s.dim, dim, dim, sel + ": gl"), label);
  } else {
    throw ParseError(sel + ": expected 'f' or 'gl' matrices");
  }
  ValidationReport v = validate_sp_rep(s, r);
  if (!v.ok()) throw ParseError(sel + ": not an sp-representation (" + v.first_failure() + ")");
  return r;
}

std::string name_of(const Context& c, const std::string& section) { return c.prefix + section; }

Json base_config(const Context& c) {
  Json j = Json::object();
  j["degree_cap"] = c.cap;
  j["jet_order"] = c.jet_order;
  j["pi_module"] = c.pi_given ? c.pi_file : "trivial";
  j["lambda"] = to_string(c.pi.lambda);
  j["sp_rep"] = c.u_name;
  return j;
}

// --- commands -----------------------------------------------------------------

bool do_validate(Report& rep, const Context& c) {
  ValidationReport v = validate_spec(c.spec);
  rep.add_section(name_of(c, "spec"), v.ok(), to_json(v), v.first_failure());
  if (!v.ok()) return false;
  if (c.pi_given || c.pi.lambda != 0) {
    ValidationReport p = validate_dprime_module(c.spec, c.pi);
    rep.add_section(name_of(c, "d-prime module"), p.ok(), to_json(p), p.first_failure());
  }
  ValidationReport u = validate_sp_rep(c.spec, c.U);
  rep.add_section(name_of(c, "sp representation"), u.ok(), to_json(u), u.first_failure());
  return true;
}

void do_axioms(Report& rep, const Context& c) {
  const Hopf& H = *c.H;
  auto hopf = check_hopf_axioms(H, 1, 6, 4);
  Json hb = Json::object();
  hb["trials"] = 6;
  hb["max_degree"] = 4;
  hb["checks"] = to_json(hopf);
  std::string hf = first_failed_item(hopf);
  rep.add_section(name_of(c, "hopf axioms"), hf.empty(), hb, hf);

  DerivedData dd = derive_invariants(c.spec);
  GenBracket hbr = h_bracket(H, dd);
  ModElem tau = tau_of_e(H, dd);
  std::vector<CheckItem> items = {
      {"W(d) skew-symmetry", check_skew(H, c.spec.dim, w_bracket(c.spec)), ""},
      {"W(d) Jacobi", check_jacobi(H, c.spec.dim, w_bracket(c.spec)), ""},
      {"H skew-symmetry", check_skew(H, 1, hbr), ""},
      {"H Jacobi", check_jacobi(H, 1, hbr), ""},
      {"iota homomorphism", check_iota_homomorphism(H, dd), ""},
      {"tau(e) via ad^sp", tau == tau_expression_adsp(H, dd), ""},
      {"tau(e) via dual basis", tau == tau_expression_dual(H, dd), ""}};
  Json pb = Json::object();
  pb["checks"] = to_json(items);
  std::string pf = first_failed_item(items);
  rep.add_section(name_of(c, "pseudobrackets"), pf.empty(), pb, pf);

  DistinguishedImages di = distinguished_images(H, dd, c.jet_order);
  Json ib = to_json(di, c.spec.dim);
  ib["jet_order"] = c.jet_order;
  rep.add_section(name_of(c, "annihilation images"), di.ok(), ib, di.failures.empty() ? "" : di.failures.front());

  auto V = make_v_module(c.H, c.pi, c.U, "V(Pi',R(" + c.U.label + "))");
  bool ok = check_module_axiom_generators(*V);
  Json mb = Json::object();
  mb["module"] = V->label();
  rep.add_section(name_of(c, "module axiom"), ok, mb);
}

std::vector<int> range(int n) {
  std::vector<int> r;
  for (int i = 0; i < n; ++i) r.push_back(i);
  return r;
}

std::string inexact_detail(const ExactnessReport& r) {
  if (!r.zero_compositions) return "nonzero composition";
  for (const auto& row : r.rows)
    if (!row.exact)
      return "term " + std::to_string(row.term) + " degree " + std::to_string(row.degree) + ": kernel " +
             std::to_string(row.kernel) + ", image " + std::to_string(row.image);
  return "";
}

std::string split_detail(const SplitVerdict& v) {
  if (!v.built) return v.notes.empty() ? "not built" : v.notes.front();
  if (!v.zero_compositions) return "nonzero composition";
  if (!v.exact) return "not exact";
  if (!v.split) return "middle terms do not split";
  return "";
}

void do_split(Report& rep, const Context& c) {
  SplitVerdict v = split_complex_check(c.H, c.pi, c.cap);
  bool ok = v.built && v.zero_compositions && v.exact && v.split;
  rep.add_section(name_of(c, "split exact complex"), ok, to_json(v), split_detail(v));
}

void do_complex(Report& rep, const Context& c) {
  if (c.pi.lambda != 0) {
    do_split(rep, c);
    return;
  }
  const int n2 = c.spec.dim;
  DeRham dr(c.H, c.pi_given ? c.pi.act : std::vector<Matrix>{});
  bool trivial_pi = !c.pi_given;

  Complex pd = dr.pseudo_de_rham();
  bool homs = true;
  for (const auto& m : pd.maps) homs = homs && check_homomorphism(m);
  ExactnessReport er = exactness_check(pd, c.cap, range(n2));
  std::vector<int> coker = cokernel_profile(pd, c.cap);
  bool exact = er.zero_compositions;
  for (int t = 0; t < n2; ++t) exact = exact && er.exact_at(t);
  bool coker_ok = !trivial_pi || coker == std::vector<int>(c.cap + 1, 1);
  Json pb = to_json(er);
  pb["homomorphisms"] = homs;
  pb["top_cokernel"] = coker;
  std::string pdetail = !homs ? "map is not a homomorphism" : !exact ? inexact_detail(er) : !coker_ok ? "top cokernel" : "";
  rep.add_section(name_of(c, "pseudo de Rham"), homs && exact && coker_ok, pb, pdetail);

  Complex cs = dr.csdr();
  homs = true;
  for (const auto& m : cs.maps) homs = homs && check_homomorphism(m);
  ExactnessReport ce = exactness_check(cs, c.cap, range(n2));
  exact = ce.zero_compositions;
  for (int t = 0; t < n2; ++t) exact = exact && ce.exact_at(t);
  bool psi = true;
  for (int n = 0; n + 2 <= n2; ++n) {
    psi = psi && check_homomorphism(dr.psi_chi(n, 0));
    if (n + 3 <= n2)
      psi = psi && compose(dr.psi_chi(n + 1, 0), dr.d(n, 0)).images == compose(dr.d(n + 2, 1), dr.psi_chi(n, 0)).images;
  }
  Json cb = to_json(ce);
  cb["terms"] = cs.labels;
  cb["homomorphisms"] = homs;
  cb["psi_chi_intertwines"] = psi;
  std::string cdetail = !homs ? "map is not a homomorphism" : !psi ? "Psi_chi does not intertwine d" : inexact_detail(ce);
  rep.add_section(name_of(c, "conformally symplectic complex"), homs && exact && psi, cb, cdetail);
}

void do_singular(Report& rep, const Context& c) {
  auto V = make_v_module(c.H, c.pi, c.U, "V(Pi',R(" + c.U.label + "))");
  SingularBasis sb = solve_singular(V, c.cap);
  SingularBasis sp = solve_singular(V, c.cap, Detector::P1Action);
  bool agree = same_span(sb, sp);
  Json sbody = Json::object();
  sbody["module"] = V->label();
  sbody["dims"] = sb.dims;
  sbody["p1_action_dims"] = sp.dims;
  sbody["detectors_agree"] = agree;
  rep.add_section(name_of(c, "singular vectors"), agree, sbody, agree ? "" : "detectors disagree");

  ClassifyVerdict cv = classify_compare(c.H, c.pi, c.U, c.cap);
  std::string detail;
  if (!cv.pass) detail = "expected " + profile_string(cv.expected) + ", found " + profile_string(cv.found);
  rep.add_section(name_of(c, "classification"), cv.pass, to_json(cv), detail);

  if (c.pi.lambda != 0) {
    if (c.U.dim == 1) {
      IrreducibilityVerdict iv = irreducibility_check(c.H, c.pi, c.cap);
      rep.add_section(name_of(c, "irreducibility"), iv.irreducible, to_json(iv),
                      iv.notes.empty() ? "" : iv.notes.back());
    }
    do_split(rep, c);
  }
}

void do_lattice(Report& rep, const Context& c) {
  if (c.pi.lambda != 0) throw ParseError("lattice needs lambda = 0");
  if (c.lattice_n < 1) throw ParseError("lattice needs --sp-rep pi:n with 1 <= n <= N");
  LatticeVerdict v = lattice_check(c.H, c.pi_given ? c.pi.act : std::vector<Matrix>(c.spec.dim, Matrix(1, 1)),
                                   c.lattice_n, c.cap);
  rep.add_section(name_of(c, "lattice"), v.pass && v.proportional, to_json(v),
                  v.notes.empty() ? "" : v.notes.back());
}

Context make_context(const RunConfig& cfg, const std::string& file, const LieAlgebraSpec& s) {
  Context c;
  c.file = file;
  c.spec = s;
  c.cap = cfg.degree_cap;
  c.jet_order = cfg.jet_order;
  c.H = std::make_shared<const Hopf>(s);
  c.pi = DPrimeModule::trivial(s.dim);
  if (!cfg.pi_module.empty()) {
    c.pi = load_pi_module(cfg.pi_module, s);
    c.pi_given = true;
    c.pi_file = std::filesystem::path(cfg.pi_module).filename().string();
  }
  if (cfg.lambda) {
    Q lambda = parse_rational(*cfg.lambda);
    if (lambda != 0) {
      if (!s.chi_zero()) throw ParseError("lambda != 0 needs chi = 0");
      ZetaResult z = solve_frobenius_splitting(s);
      if (!z.exists) throw ParseError("lambda != 0 needs a Frobenius algebra (omega = d zeta)");
      for (int i = 0; i < s.dim; ++i) c.pi.act[i] += Matrix::identity(c.pi.dim) * (z.zeta[i] * lambda);
    }
    c.pi.lambda = lambda;
  }
  c.U = load_sp_rep(cfg.sp_rep, s, c.lattice_n);
  c.u_name = cfg.sp_rep.rfind("pi:", 0) == 0 || cfg.sp_rep == "sym2" ? cfg.sp_rep
                                                                      : std::filesystem::path(cfg.sp_rep).filename().string();
  return c;
}

// Runs one command on one spec; returns false if the spec itself is invalid.
bool run_on(Report& rep, const std::string& command, const Context& c) {
  if (command == "validate") return do_validate(rep, c);
  ValidationReport v = validate_spec(c.spec);
  if (!v.ok()) {
    rep.add_section(name_of(c, "spec"), false, to_json(v), v.first_failure());
    return false;
  }
  if (command == "axioms") do_axioms(rep, c);
  if (command == "complex") do_complex(rep, c);
  if (command == "singular") do_singular(rep, c);
  if (command == "lattice") do_lattice(rep, c);
  if (command == "all") {
    do_validate(rep, c);
    do_axioms(rep, c);
    do_complex(rep, c);
    do_singular(rep, c);
    if (c.pi.lambda == 0 && c.lattice_n >= 1) do_lattice(rep, c);
  }
  return true;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  static const std::vector<std::string> commands = {"validate", "axioms", "complex", "singular", "lattice", "all"};
  RunResult res;
  try {
    if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
      throw ParseError("unknown command '" + cfg.command + "'");
    if (cfg.degree_cap < 2) throw ParseError("--degree-cap must be at least 2");
    if (cfg.jet_order < 3) throw ParseError("--jet-order must be at least 3");
    Report rep(cfg.command);
    if (cfg.spec.empty()) {
      if (cfg.command != "all") throw ParseError("--spec is required for '" + cfg.command + "'");
      // Built-in battery; the cap is lowered to 3 at 2N = 4.
      Json config = Json::object();
      config["degree_cap"] = cfg.degree_cap;
      config["jet_order"] = cfg.jet_order;
      config["battery"] = true;
      rep.set_config(config);
      for (const LieAlgebraSpec& s : battery()) {
        RunConfig sub = cfg;
        sub.pi_module.clear();
        sub.lambda.reset();
        sub.sp_rep = "pi:1";
        if (s.dim > 2) sub.degree_cap = std::min(cfg.degree_cap, 3);
        Context c = make_context(sub, s.name, s);
        c.prefix = s.name + ": ";
        run_on(rep, "all", c);
        if (s.chi_zero() && solve_frobenius_splitting(s).exists && s.dim == 2) {
          sub.lambda = "1";
          Context cl = make_context(sub, s.name, s);
          cl.prefix = s.name + " (lambda = 1): ";
          do_singular(rep, cl);
        }
      }
    } else {
      LieAlgebraSpec s = load_spec_file(cfg.spec);
      Context c = make_context(cfg, std::filesystem::path(cfg.spec).filename().string(), s);
      rep.set_spec(c.file, s);
      rep.set_config(base_config(c));
      run_on(rep, cfg.command, c);
    }
    res.report = rep.dump();
    res.exit_code = rep.pass() ? kExitPass : kExitVerify;
    res.message = rep.pass() ? "PASS " + cfg.command : "FAIL " + cfg.command + ": " + rep.first_failure();
  } catch (const ParseError& e) {
    res.exit_code = kExitParse;
    res.report.clear();
    res.message = std::string("error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kExitParse;
    res.report.clear();
    res.message = std::string("error: ") + e.what();
  }
  return res;
}

}  // namespace hp
