// liecoh: exact-arithmetic Chevalley-Eilenberg cohomology for the model
// family of frobeniusian solvable Lie algebras. All computation is over Q;
// identical inputs and seed produce byte-identical output.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "liecoh/errors.hpp"
#include "liecoh/exterior.hpp"
#include "liecoh/family.hpp"
#include "liecoh/json_io.hpp"
#include "liecoh/mc_text.hpp"

using namespace liecoh;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  int p = 0;
  std::string phi_csv;
  std::string algebra_path;
  int degree = 2;
  bool graded = false;
  int k = 0;
  std::string t_str = "1";
  bool json = false;
  std::string out;
  std::uint64_t seed = 0;
  int trials = 50;
  int max_p = 6;
  std::string grid;
  int count = 0;
  std::string convert_input;
};

std::uint64_t env_seed() {
  const char* env = std::getenv("LIECOH_SEED");
  if (!env) return 0;
  try {
    return std::stoull(env);
  } catch (...) {
    throw input_error("environment LIECOH_SEED is not an unsigned integer");
  }
}

std::vector<Rational> parse_phi_csv(const std::string& csv) {
  std::vector<Rational> phi;
  std::string piece;
  std::istringstream ss(csv);
  while (std::getline(ss, piece, ',')) phi.push_back(Rational::parse(piece));
  return phi;
}

FamilyParams family_from_flags(const Options& opt) {
  if (opt.p < 2) throw input_error("flag --p must be given and at least 2");
  if (opt.p > opt.max_p)
    throw input_error("p = " + std::to_string(opt.p) + " exceeds the cost guard (raise --max-p)");
  return FamilyParams(opt.p, parse_phi_csv(opt.phi_csv));
}

LieAlgebra algebra_from_flags(const Options& opt) {
  if (!opt.algebra_path.empty()) return algebra_from_json(read_file(opt.algebra_path));
  return build_F(family_from_flags(opt));
}

void emit(const Options& opt, const std::string& body) {
  std::cout << body;
  if (!opt.out.empty()) write_file(opt.out, body);
}

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

std::string conventions_line() { return "conventions: d-sign=+ sq1-factor=1\n"; }

std::string dims_map_str(const std::map<int, int>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, d] : m) {
    if (!first) os << " ";
    os << w << ":" << d;
    first = false;
  }
  return os.str();
}

std::string suite_report_to_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "model verification: p=" << rep.params.p << " phi=" << rep.params.phi_str() << "\n";
  if (rep.omega.generic()) {
    os << "omega: generic\n";
  } else {
    os << "omega: non-generic\n";
    for (const auto& h : rep.omega.violated)
      os << "  in Omega" << h.list << " via " << h.rendered << "\n";
  }
  os << "dims: der=" << rep.dims.der << " h1=" << rep.dims.h1 << " h2=" << rep.dims.h2
     << " z2_total=" << rep.dims.z2_total << " b2_total=" << rep.dims.b2_total << "\n";
  os << "graded z2: " << dims_map_str(rep.dims.graded_z2) << "\n";
  os << "graded b2: " << dims_map_str(rep.dims.graded_b2) << "\n";
  os << "checks:\n";
  for (const auto& c : rep.checks) {
    os << "  " << c.name;
    for (std::size_t i = c.name.size(); i < 14; ++i) os << ' ';
    os << " " << status_str(c.status);
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << conventions_line();
  os << "result: " << (rep.all_passed() ? "PASS" : "FAIL") << " (" << rep.checks.size()
     << " checks, " << rep.failed() << " failed, " << rep.skipped() << " skipped)\n";
  return os.str();
}

int run_verify_model(const Options& opt) {
  const SuiteReport rep = model_verification_suite(family_from_flags(opt));
  emit(opt, opt.json ? suite_report_to_json(rep) : suite_report_to_text(rep));
  return rep.all_passed() ? 0 : 1;
}

int run_omega(const Options& opt) {
  const FamilyParams params = family_from_flags(opt);
  const HyperplaneReport rep = omega_report(params);
  if (opt.json) {
    ordered_json j;
    j["p"] = params.p;
    ordered_json phi = ordered_json::array();
    for (const auto& x : params.phi) phi.push_back(x.str());
    j["phi"] = std::move(phi);
    j["in_omega1"] = rep.in_omega1;
    j["in_omega2"] = rep.in_omega2;
    ordered_json hits = ordered_json::array();
    for (const auto& h : rep.violated) {
      ordered_json e;
      e["list"] = h.list;
      e["family"] = h.family;
      e["i"] = h.i;
      if (h.j) e["j"] = h.j;
      e["equation"] = h.rendered;
      hits.push_back(std::move(e));
    }
    j["violated"] = std::move(hits);
    j["legend"] = "family 2phi_i-phi_j is evaluated for i != j; "
                  "all other two-index families include i = j";
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "omega report: p=" << params.p << " phi=" << params.phi_str() << "\n";
    if (rep.generic()) {
      os << "generic: not in Omega1, not in Omega2\n";
    } else {
      for (const auto& h : rep.violated)
        os << "in Omega" << h.list << " via " << h.rendered << "\n";
    }
    os << "legend: family 2phi_i-phi_j is evaluated for i != j; "
          "all other two-index families include i = j\n";
    emit(opt, os.str());
  }
  return 0;
}

int run_cohomology(const Options& opt) {
  const LieAlgebra g = algebra_from_flags(opt);
  const int q = opt.degree;
  if (q < 0 || q > g.dim()) throw input_error("flag --degree must lie in 0..dim");
  const int zdim = static_cast<int>(cocycle_space(g, q).dim());
  const int bdim = static_cast<int>(coboundary_space(g, q).dim());
  const int cdim = static_cast<int>(cochain_space_dim(g.dim(), q));
  std::map<int, std::pair<int, int>> gdims;
  if (opt.graded) {
    if (!opt.algebra_path.empty())
      throw input_error("flag --graded requires family parameters --p/--phi "
                        "(the weight grading is the family's)");
    const FamilyParams params = family_from_flags(opt);
    const Grading gr = family_grading(g, params.p);
    gdims = graded_dims(g, gr, q);
  }
  if (opt.json) {
    ordered_json j;
    j["degree"] = q;
    j["dim_c"] = cdim;
    j["dim_z"] = zdim;
    j["dim_b"] = bdim;
    j["dim_h"] = zdim - bdim;
    if (opt.graded) {
      ordered_json gz, gb;
      for (const auto& [w, zb] : gdims) {
        gz[std::to_string(w)] = zb.first;
        gb[std::to_string(w)] = zb.second;
      }
      j["graded_z"] = std::move(gz);
      j["graded_b"] = std::move(gb);
    }
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "cohomology: degree " << q << ", dim C^" << q << " = " << cdim << ", dim Z^" << q
       << " = " << zdim << ", dim B^" << q << " = " << bdim << ", dim H^" << q << " = "
       << (zdim - bdim) << "\n";
    if (opt.graded) {
      os << "graded (weight: dim Z, dim B):";
      for (const auto& [w, zb] : gdims) os << "  " << w << ": " << zb.first << "," << zb.second;
      os << "\n";
    }
    os << conventions_line();
    emit(opt, os.str());
  }
  return 0;
}

int run_derivations(const Options& opt) {
  const LieAlgebra g = algebra_from_flags(opt);
  const int der = static_cast<int>(derivations(g).dim());
  const int inner = g.dim() - static_cast<int>(center(g).dim());
  if (opt.json) {
    ordered_json j;
    j["dim"] = g.dim();
    j["der"] = der;
    j["inner"] = inner;
    j["h1"] = der - inner;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "derivations: dim g = " << g.dim() << ", dim Der = " << der << ", inner = " << inner
       << ", dim H^1 = " << (der - inner) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int run_invariants(const Options& opt) {
  const LieAlgebra g = algebra_from_flags(opt);
  const auto violations = jacobi_check(g);
  const int zdim = static_cast<int>(center(g).dim());
  const auto series = derived_series(g);
  const auto steps = solvable_steps(g);
  const int der = static_cast<int>(derivations(g).dim());
  std::optional<H1BoundReport> bound;
  if (!opt.algebra_path.empty() && opt.p >= 2)
    bound = h1_bound_check(g, family_from_flags(opt));
  bool ok = violations.empty();
  if (bound) ok = ok && bound->compatible && bound->bound_holds;
  if (opt.json) {
    ordered_json j;
    j["dim"] = g.dim();
    j["jacobi_violations"] = violations.size();
    j["center_dim"] = zdim;
    ordered_json ds = ordered_json::array();
    for (const auto& s : series) ds.push_back(s.dim());
    j["derived_series_dims"] = std::move(ds);
    if (steps)
      j["solvable_steps"] = *steps;
    else
      j["solvable_steps"] = nullptr;
    j["der"] = der;
    if (bound) {
      ordered_json b;
      b["p"] = bound->p;
      b["center_dim"] = bound->center_dim;
      b["compatible"] = bound->compatible;
      b["der"] = bound->der_dim;
      b["h1"] = bound->h1;
      b["bound"] = bound->bound;
      b["bound_holds"] = bound->bound_holds;
      ordered_json c;
      c["der_ok"] = bound->contraction.der_ok;
      c["derived_ok"] = bound->contraction.derived_ok;
      c["center_ok"] = bound->contraction.center_ok;
      c["der_g"] = bound->contraction.der_g;
      c["der_h"] = bound->contraction.der_h;
      c["derived_g"] = bound->contraction.derived_g;
      c["derived_h"] = bound->contraction.derived_h;
      c["center_g"] = bound->contraction.center_g;
      c["center_h"] = bound->contraction.center_h;
      b["contraction"] = std::move(c);
      b["proper_contraction_possible"] = bound->proper_contraction_possible;
      j["h1_bound"] = std::move(b);
    }
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "invariants: dim = " << g.dim() << "\n";
    os << "jacobi: " << (violations.empty() ? "holds" : "FAILS") << "\n";
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
      os << "  violation " << describe(violations[i]) << "\n";
    os << "center dim: " << zdim << "\n";
    os << "derived series dims:";
    for (const auto& s : series) os << " " << s.dim();
    os << "\n";
    os << "solvable steps: " << (steps ? std::to_string(*steps) : "not solvable") << "\n";
    os << "dim Der: " << der << "\n";
    if (bound) {
      os << "h1 bound vs model at p=" << bound->p << ":\n";
      if (!bound->compatible) {
        os << "  not frobeniusian-compatible (center dim " << bound->center_dim << " != 0)\n";
      } else {
        os << "  dim H^1 = dim Der - 2p = " << bound->h1 << ", bound p-2 = " << bound->bound
           << " -> " << (bound->bound_holds ? "holds" : "FAILS") << "\n";
      }
      os << "  contraction conditions: der " << (bound->contraction.der_ok ? "ok" : "fails")
         << " (" << bound->contraction.der_g << " < " << bound->contraction.der_h << "), derived "
         << (bound->contraction.derived_ok ? "ok" : "fails") << " ("
         << bound->contraction.derived_g << " >= " << bound->contraction.derived_h << "), center "
         << (bound->contraction.center_ok ? "ok" : "fails") << " (" << bound->contraction.center_g
         << " <= " << bound->contraction.center_h << ")\n";
      if (!bound->proper_contraction_possible) os << "  not a proper contraction candidate\n";
    }
    emit(opt, os.str());
  }
  return ok ? 0 : 1;
}

int run_rim(const Options& opt) {
  const FamilyParams params = family_from_flags(opt);
  if (!omega_report(params).generic()) throw input_error("rim: non-generic parameters");
  const LieAlgebra f = build_F(params);
  std::vector<int> ks;
  if (opt.k > 0)
    ks.push_back(opt.k);
  else
    for (int k = 1; k <= params.p - 1; ++k) ks.push_back(k);
  bool ok = true;
  ordered_json arr = ordered_json::array();
  std::ostringstream os;
  os << "rim map on the cohomology representatives: p=" << params.p
     << " phi=" << params.phi_str() << "\n";
  for (int k : ks) {
    const Cochain rep = h2_representative(params, k);
    const bool zero = nr_square(f, rep).is_zero();
    const bool vanish = sq1_vanishes(f, rep);
    ok = ok && zero && vanish;
    os << "  k=" << k << ": psi o psi " << (zero ? "= 0 identically" : "!= 0")
       << ", class vanishes: " << (vanish ? "yes" : "no") << "\n";
    ordered_json e;
    e["k"] = k;
    e["square_zero"] = zero;
    e["class_vanishes"] = vanish;
    arr.push_back(std::move(e));
  }
  os << conventions_line();
  if (opt.json) {
    ordered_json j;
    j["p"] = params.p;
    j["results"] = std::move(arr);
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, os.str());
  }
  return ok ? 0 : 1;
}

int run_deform(const Options& opt) {
  const FamilyParams params = family_from_flags(opt);
  if (opt.k < 1) throw input_error("flag --k must be given and at least 1");
  const Rational t = Rational::parse(opt.t_str);
  const DeformationReport rep = deformation_stays_in_family(params, opt.k, t);
  if (opt.json) {
    ordered_json j;
    j["k"] = rep.k;
    j["t"] = rep.t.str();
    j["matches_family"] = rep.matches_family;
    ordered_json phi = ordered_json::array();
    for (const auto& x : rep.target.phi) phi.push_back(x.str());
    j["target_phi"] = std::move(phi);
    j["target_in_omega"] = rep.target_in_omega;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "deformation along psi^{2k+1}_{2,2k+1}, k=" << rep.k << ", t=" << rep.t.str() << "\n";
    os << "structure constants match F" << rep.target.phi_str() << ": "
       << (rep.matches_family ? "yes" : "NO") << "\n";
    os << "target parameters " << (rep.target_in_omega ? "lie in Omega" : "are generic") << "\n";
    emit(opt, os.str());
  }
  return rep.matches_family ? 0 : 1;
}

int run_witness(const Options& opt, bool contact) {
  const LieAlgebra g = algebra_from_flags(opt);
  const auto w = contact ? contact_witness(g, opt.seed, opt.trials)
                         : frobenius_witness(g, opt.seed, opt.trials);
  if (opt.json) {
    ordered_json j;
    j["dim"] = g.dim();
    j["kind"] = contact ? "contact" : "frobenius";
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["found"] = w.has_value();
    if (w) j["witness"] = ordered_json::parse(one_form_to_json(*w));
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (contact ? "contact" : "frobenius") << " test: dim = " << g.dim() << "\n";
    if (w) {
      os << "witness 1-form: " << one_form_to_json(*w);
    } else {
      os << "no witness after canonical duals + " << opt.trials
         << " seeded random forms (absence is evidence, not proof)\n";
    }
    emit(opt, os.str());
  }
  return w ? 0 : 1;
}

std::vector<long> parse_grid(const std::string& grid) {
  const auto dots = grid.find("..");
  if (dots == std::string::npos) throw input_error("flag --grid must look like \"a..b\"");
  long a = 0, b = 0;
  try {
    a = std::stol(grid.substr(0, dots));
    b = std::stol(grid.substr(dots + 2));
  } catch (...) {
    throw input_error("flag --grid must hold integers \"a..b\"");
  }
  if (b < a) throw input_error("flag --grid: empty range");
  std::vector<long> vals;
  for (long v = a; v <= b; ++v) vals.push_back(v);
  return vals;
}

int run_sweep(const Options& opt) {
  if (opt.p < 2) throw input_error("flag --p must be given and at least 2");
  if (opt.p > opt.max_p)
    throw input_error("p = " + std::to_string(opt.p) + " exceeds the cost guard (raise --max-p)");
  const int m = opt.p - 1;
  std::vector<FamilyParams> points;
  if (!opt.grid.empty()) {
    const std::vector<long> vals = parse_grid(opt.grid);
    double total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<double>(vals.size());
    if (total > 20000) throw input_error("sweep grid has too many points (cap 20000)");
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      std::vector<Rational> phi;
      for (int i = 0; i < m; ++i) phi.emplace_back(vals[idx[static_cast<std::size_t>(i)]]);
      points.emplace_back(opt.p, std::move(phi));
      int pos = m - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == vals.size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  } else if (opt.count > 0) {
    for (int i = 0; i < opt.count; ++i)
      points.push_back(random_generic_params(opt.p, opt.seed + static_cast<std::uint64_t>(i)));
  }
  int pass = 0, fail = 0, nongeneric = 0;
  std::ostringstream os;
  ordered_json arr = ordered_json::array();
  for (const auto& params : points) {
    const SuiteReport rep = model_verification_suite(params);
    std::string status;
    if (!rep.omega.generic()) {
      status = "non-generic";
      ++nongeneric;
    } else if (rep.all_passed()) {
      status = "pass";
      ++pass;
    } else {
      status = "fail";
      ++fail;
    }
    os << "phi=" << params.phi_str() << " status=" << status;
    if (status == "non-generic")
      os << " [" << (rep.omega.violated.empty() ? "?" : rep.omega.violated.front().rendered)
         << "]";
    else
      os << " der=" << rep.dims.der << " h1=" << rep.dims.h1 << " h2=" << rep.dims.h2;
    os << "\n";
    ordered_json e;
    ordered_json phi = ordered_json::array();
    for (const auto& x : params.phi) phi.push_back(x.str());
    e["phi"] = std::move(phi);
    e["status"] = status;
    e["der"] = rep.dims.der;
    e["h1"] = rep.dims.h1;
    e["h2"] = rep.dims.h2;
    arr.push_back(std::move(e));
  }
  os << "sweep summary: " << points.size() << " points, " << pass << " pass, " << fail
     << " fail, " << nongeneric << " non-generic\n";
  if (opt.json) {
    ordered_json j;
    j["p"] = opt.p;
    j["points"] = std::move(arr);
    ordered_json s;
    s["total"] = points.size();
    s["pass"] = pass;
    s["fail"] = fail;
    s["non_generic"] = nongeneric;
    j["summary"] = std::move(s);
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, os.str());
  }
  return fail == 0 ? 0 : 1;
}

int run_convert(const Options& opt) {
  const MaurerCartan mc = parse_maurer_cartan(read_file(opt.convert_input));
  const LieAlgebra g = from_maurer_cartan(mc);
  emit(opt, algebra_to_json(g));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Chevalley-Eilenberg cohomology of frobeniusian model Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  try {
    opt.seed = env_seed();
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", opt.p, "family parameter p (dimension 2p)");
    cmd->add_option("--phi", opt.phi_csv, "comma-separated rational parameters phi_1..phi_{p-1}");
    cmd->add_option("--max-p", opt.max_p, "cost guard on p (default 6)");
  };
  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    cmd->add_option("--out", opt.out, "also write the report to this path");
  };

  CLI::App* verify = app.add_subcommand("verify-model", "run the whole model check suite");
  add_family_flags(verify);
  add_output_flags(verify);
  verify->add_option("--seed", opt.seed, "seed recorded for reproducibility");

  CLI::App* cohom = app.add_subcommand("cohomology", "cocycle/coboundary/cohomology dimensions");
  add_family_flags(cohom);
  add_output_flags(cohom);
  cohom->add_option("--algebra", opt.algebra_path, "algebra JSON file");
  cohom->add_option("--degree", opt.degree, "cochain degree q");
  cohom->add_flag("--graded", opt.graded, "also decompose by weight (family parameters only)");

  CLI::App* der = app.add_subcommand("derivations", "derivation algebra dimensions");
  add_family_flags(der);
  add_output_flags(der);
  der->add_option("--algebra", opt.algebra_path, "algebra JSON file");

  CLI::App* inv = app.add_subcommand("invariants", "jacobi, center, derived series, solvability");
  add_family_flags(inv);
  add_output_flags(inv);
  inv->add_option("--algebra", opt.algebra_path, "algebra JSON file");

  CLI::App* rim = app.add_subcommand("rim", "squares of the cohomology representatives");
  add_family_flags(rim);
  add_output_flags(rim);
  rim->add_option("--k", opt.k, "restrict to one representative");

  CLI::App* deform = app.add_subcommand("deform", "linear deformation along a representative");
  add_family_flags(deform);
  add_output_flags(deform);
  deform->add_option("--k", opt.k, "which representative psi^{2k+1}_{2,2k+1}");
  deform->add_option("--t", opt.t_str, "deformation parameter (rational)");

  CLI::App* omega = app.add_subcommand("omega", "genericity hyperplane report");
  add_family_flags(omega);
  add_output_flags(omega);

  CLI::App* frob =
      app.add_subcommand("frobenius-test", "search a 1-form with symplectic differential");
  add_family_flags(frob);
  add_output_flags(frob);
  frob->add_option("--algebra", opt.algebra_path, "algebra JSON file");
  frob->add_option("--seed", opt.seed, "seed for the random candidates");
  frob->add_option("--trials", opt.trials, "random candidates tried after the canonical duals");

  CLI::App* contact = app.add_subcommand("contact-test", "search a contact form (odd dimension)");
  add_output_flags(contact);
  contact->add_option("--algebra", opt.algebra_path, "algebra JSON file")->required();
  contact->add_option("--seed", opt.seed, "seed for the random candidates");
  contact->add_option("--trials", opt.trials, "random candidates tried after the canonical duals");

  CLI::App* sweep = app.add_subcommand("sweep", "run the suite over a parameter grid or sample");
  add_family_flags(sweep);
  add_output_flags(sweep);
  sweep->add_option("--grid", opt.grid, "integer range a..b swept in every coordinate");
  sweep->add_option("--count", opt.count, "number of seeded random generic points");
  sweep->add_option("--seed", opt.seed, "seed for --count sampling");

  CLI::App* convert = app.add_subcommand("convert", "Maurer-Cartan text -> algebra JSON");
  add_output_flags(convert);
  convert->add_option("input", opt.convert_input, "Maurer-Cartan text file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify_model(opt);
    if (app.got_subcommand(cohom)) return run_cohomology(opt);
    if (app.got_subcommand(der)) return run_derivations(opt);
    if (app.got_subcommand(inv)) return run_invariants(opt);
    if (app.got_subcommand(rim)) return run_rim(opt);
    if (app.got_subcommand(deform)) return run_deform(opt);
    if (app.got_subcommand(omega)) return run_omega(opt);
    if (app.got_subcommand(frob)) return run_witness(opt, false);
    if (app.got_subcommand(contact)) return run_witness(opt, true);
    if (app.got_subcommand(sweep)) return run_sweep(opt);
    if (app.got_subcommand(convert)) return run_convert(opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
