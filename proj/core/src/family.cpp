#include "liecoh/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liecoh/errors.hpp"
#include "liecoh/rng.hpp"

namespace liecoh {

FamilyParams::FamilyParams(int p_, std::vector<Rational> phi_) : p(p_), phi(std::move(phi_)) {
  if (p < 2) throw input_error("family: p must be at least 2");
  if (static_cast<int>(phi.size()) != p - 1)
    throw input_error("family: phi must have p-1 entries");
}

std::string FamilyParams::phi_str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s += ",";
    s += phi[i].str();
  }
  return s + ")";
}

LieAlgebra build_F(const FamilyParams& params) {
  const int p = params.p;
  BracketMap br;
  br[{1, 2}][1] = 1;
  for (int k = 1; k <= p - 1; ++k) {
    const Rational& ph = params.phi[static_cast<std::size_t>(k - 1)];
    br[{2 * k + 1, 2 * k + 2}][1] = 1;
    if (!ph.is_zero()) br[{2, 2 * k + 1}][2 * k + 1] = ph;
    const Rational ev = -(Rational(1) + ph);
    if (!ev.is_zero()) br[{2, 2 * k + 2}][2 * k + 2] = ev;
  }
  return LieAlgebra::checked(2 * p, std::move(br));
}

std::vector<int> family_weights(int p) {
  std::vector<int> w(static_cast<std::size_t>(2 * p), 1);
  w[0] = 2;
  w[1] = 0;
  return w;
}

Grading family_grading(const LieAlgebra& f, int p) { return Grading(f, family_weights(p)); }

namespace {

std::string subscript(int i, int j) {
  return "phi_" + std::to_string(i) + (j ? ("," + std::to_string(j)) : "");
}

void hit(HyperplaneReport& rep, int list, const std::string& family, int i, int j,
         const std::string& rendered) {
  HyperplaneHit h;
  h.family = family;
  h.list = list;
  h.i = i;
  h.j = j;
  h.rendered = rendered;
  rep.violated.push_back(std::move(h));
  (list == 1 ? rep.in_omega1 : rep.in_omega2) = true;
}

} // namespace

HyperplaneReport omega_report(const FamilyParams& params) {
  const int m = params.p - 1;
  const auto phi = [&](int i) { return params.phi[static_cast<std::size_t>(i - 1)]; };
  HyperplaneReport rep;
  const Rational one(1), two(2);
  // first list
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      if ((one + phi(i) + phi(j)).is_zero())
        hit(rep, 1, "1+phi_i+phi_j", i, j,
            "1+phi_" + std::to_string(i) + "+phi_" + std::to_string(j) + " = 0");
      if ((two + phi(i) + phi(j)).is_zero())
        hit(rep, 1, "2+phi_i+phi_j", i, j,
            "2+phi_" + std::to_string(i) + "+phi_" + std::to_string(j) + " = 0");
    }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if ((phi(i) - phi(j)).is_zero())
        hit(rep, 1, "phi_i-phi_j", i, j,
            "phi_" + std::to_string(i) + "-phi_" + std::to_string(j) + " = 0");
  for (int i = 1; i <= m; ++i) {
    if (phi(i).is_zero()) hit(rep, 1, "phi_i", i, 0, subscript(i, 0) + " = 0");
    if ((phi(i) + one).is_zero())
      hit(rep, 1, "phi_i+1", i, 0, "phi_" + std::to_string(i) + "+1 = 0");
    if ((two * phi(i) + one).is_zero())
      hit(rep, 1, "2phi_i+1", i, 0, "2phi_" + std::to_string(i) + "+1 = 0");
  }
  // second list
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i != j && (one + phi(i) - phi(j)).is_zero())
        hit(rep, 2, "1+phi_i-phi_j", i, j,
            "1+phi_" + std::to_string(i) + "-phi_" + std::to_string(j) + " = 0");
      if (j >= i && (phi(i) + phi(j)).is_zero())
        hit(rep, 2, "phi_i+phi_j", i, j,
            "phi_" + std::to_string(i) + "+phi_" + std::to_string(j) + " = 0");
      if ((one + two * phi(i) - phi(j)).is_zero())
        hit(rep, 2, "1+2phi_i-phi_j", i, j,
            "1+2phi_" + std::to_string(i) + "-phi_" + std::to_string(j) + " = 0");
      if ((one + two * phi(i) + phi(j)).is_zero())
        hit(rep, 2, "1+2phi_i+phi_j", i, j,
            "1+2phi_" + std::to_string(i) + "+phi_" + std::to_string(j) + " = 0");
      if (i != j && (two * phi(i) - phi(j)).is_zero())
        hit(rep, 2, "2phi_i-phi_j", i, j,
            "2phi_" + std::to_string(i) + "-phi_" + std::to_string(j) + " = 0");
      if ((two + two * phi(i) + phi(j)).is_zero())
        hit(rep, 2, "2+2phi_i+phi_j", i, j,
            "2+2phi_" + std::to_string(i) + "+phi_" + std::to_string(j) + " = 0");
    }
  for (int i = 1; i <= m; ++i) {
    if ((two + phi(i)).is_zero())
      hit(rep, 2, "2+phi_i", i, 0, "2+phi_" + std::to_string(i) + " = 0");
    if ((one - phi(i)).is_zero())
      hit(rep, 2, "1-phi_i", i, 0, "1-phi_" + std::to_string(i) + " = 0");
  }
  return rep;
}

int cocycle_weight(CocycleKind kind) {
  switch (kind) {
    case CocycleKind::psi2_12: return -2;
    case CocycleKind::psi2_2_odd:
    case CocycleKind::psi2_2_even:
    case CocycleKind::psi_odd_12:
    case CocycleKind::psi_even_12: return -1;
    case CocycleKind::psi1_2j: return 1;
    default: return 0;
  }
}

std::string CocycleName::str() const {
  const auto os = std::to_string(2 * k + 1);
  const auto es = std::to_string(2 * k + 2);
  switch (kind) {
    case CocycleKind::psi2_12: return "psi^2_{1,2}";
    case CocycleKind::psi2_2_odd: return "psi^2_{2," + os + "}";
    case CocycleKind::psi2_2_even: return "psi^2_{2," + es + "}";
    case CocycleKind::psi_odd_12: return "psi^" + os + "_{1,2}";
    case CocycleKind::psi_even_12: return "psi^" + es + "_{1,2}";
    case CocycleKind::psi1_12: return "psi^1_{1,2}";
    case CocycleKind::psi_odd_2_odd:
      return "psi^" + std::to_string(2 * t + 1) + "_{2," + os + "}";
    case CocycleKind::psi_even_2_odd:
      return "psi^" + std::to_string(2 * t + 2) + "_{2," + os + "}";
    case CocycleKind::psi_odd_2_even:
      return "psi^" + std::to_string(2 * t + 1) + "_{2," + es + "}";
    case CocycleKind::psi_even_2_even:
      return "psi^" + std::to_string(2 * t + 2) + "_{2," + es + "}";
    case CocycleKind::psi1_pair: return "psi^1_{" + os + "," + es + "}";
    case CocycleKind::psi_even_2_odd_unit: return "psi^" + es + "_{2," + os + "}";
    case CocycleKind::psi_odd_2_even_unit: return "psi^" + os + "_{2," + es + "}";
    case CocycleKind::psi1_2j: return "psi^1_{2," + std::to_string(j) + "}";
    case CocycleKind::theta: return "theta";
  }
  return "?";
}

namespace {

void check_k(int p, int k) {
  if (k < 1 || k > p - 1) throw input_error("cocycle name: k out of range 1..p-1");
}

} // namespace

Cochain catalogue_cocycle(const FamilyParams& params, const CocycleName& name) {
  const int p = params.p;
  const int n = 2 * p;
  const auto phi = [&](int i) { return params.phi[static_cast<std::size_t>(i - 1)]; };
  Cochain c(2, n);
  const Rational one(1);
  switch (name.kind) {
    case CocycleKind::psi2_12:
      c.add({1, 2}, 2, one);
      for (int k = 1; k <= p - 1; ++k) {
        c.add({1, 2 * k + 1}, 2 * k + 1, -phi(k));
        c.add({1, 2 * k + 2}, 2 * k + 2, one + phi(k));
        c.add({2 * k + 1, 2 * k + 2}, 2, one);
      }
      return c;
    case CocycleKind::psi2_2_odd: {
      check_k(p, name.k);
      const int o = 2 * name.k + 1, e = 2 * name.k + 2;
      c.add({1, o}, 1, one);
      c.add({2, o}, 2, -phi(name.k));
      c.add({o, e}, e, -(one + phi(name.k)));
      for (int kp = 1; kp <= p - 1; ++kp) {
        if (kp == name.k) continue;
        c.add({o, 2 * kp + 1}, 2 * kp + 1, phi(kp));
        c.add({o, 2 * kp + 2}, 2 * kp + 2, -(one + phi(kp)));
      }
      return c;
    }
    case CocycleKind::psi2_2_even: {
      check_k(p, name.k);
      const int o = 2 * name.k + 1, e = 2 * name.k + 2;
      c.add({1, e}, 1, one);
      c.add({2, e}, 2, one + phi(name.k));
      c.add({o, e}, o, -phi(name.k));
      for (int kp = 1; kp <= p - 1; ++kp) {
        if (kp == name.k) continue;
        c.add({e, 2 * kp + 1}, 2 * kp + 1, phi(kp));
        c.add({e, 2 * kp + 2}, 2 * kp + 2, -(one + phi(kp)));
      }
      return c;
    }
    case CocycleKind::psi_odd_12: {
      check_k(p, name.k);
      const int o = 2 * name.k + 1, e = 2 * name.k + 2;
      c.add({1, 2}, o, one + phi(name.k));
      c.add({1, e}, 1, -one);
      for (int jj = 1; jj <= p - 1; ++jj) c.add({2 * jj + 1, 2 * jj + 2}, o, one);
      return c;
    }
    case CocycleKind::psi_even_12: {
      check_k(p, name.k);
      const int o = 2 * name.k + 1, e = 2 * name.k + 2;
      c.add({1, 2}, e, phi(name.k));
      c.add({1, o}, 1, -one);
      for (int jj = 1; jj <= p - 1; ++jj) c.add({2 * jj + 1, 2 * jj + 2}, e, -one);
      return c;
    }
    case CocycleKind::psi1_12:
      c.add({1, 2}, 1, one);
      for (int k = 1; k <= p - 1; ++k) c.add({2, 2 * k + 2}, 2 * k + 2, -one);
      return c;
    case CocycleKind::psi_odd_2_odd: {
      check_k(p, name.k);
      check_k(p, name.t);
      const int o = 2 * name.k + 1;
      if (name.t == name.k) {
        // the diagonal member: its class generates H^2 together with its
        // siblings over k
        c.add({2, o}, o, one);
        c.add({2, 2 * name.k + 2}, 2 * name.k + 2, -one);
        return c;
      }
      c.add({2, o}, 2 * name.t + 1, phi(name.k) - phi(name.t));
      c.add({o, 2 * name.t + 2}, 1, -one);
      return c;
    }
    case CocycleKind::psi_even_2_odd: {
      check_k(p, name.k);
      check_k(p, name.t);
      if (name.t == name.k) throw input_error("cocycle name: k != t required");
      const int o = 2 * name.k + 1;
      c.add({2, o}, 2 * name.t + 2, -(one + phi(name.t) + phi(name.k)));
      c.add({o, 2 * name.t + 1}, 1, -one);
      return c;
    }
    case CocycleKind::psi_odd_2_even: {
      check_k(p, name.k);
      check_k(p, name.t);
      if (name.t == name.k) throw input_error("cocycle name: k != t required");
      const int e = 2 * name.k + 2;
      c.add({2, e}, 2 * name.t + 1, one + phi(name.t) + phi(name.k));
      c.add({e, 2 * name.t + 2}, 1, one);
      return c;
    }
    case CocycleKind::psi_even_2_even: {
      check_k(p, name.k);
      check_k(p, name.t);
      if (name.t == name.k) throw input_error("cocycle name: k != t required");
      const int e = 2 * name.k + 2;
      c.add({2, e}, 2 * name.t + 2, phi(name.k) - phi(name.t));
      c.add({e, 2 * name.t + 1}, 1, -one);
      return c;
    }
    case CocycleKind::psi1_pair:
      check_k(p, name.k);
      c.add({2 * name.k + 1, 2 * name.k + 2}, 1, one);
      return c;
    case CocycleKind::psi_even_2_odd_unit:
      check_k(p, name.k);
      c.add({2, 2 * name.k + 1}, 2 * name.k + 2, one);
      return c;
    case CocycleKind::psi_odd_2_even_unit:
      check_k(p, name.k);
      c.add({2, 2 * name.k + 2}, 2 * name.k + 1, one);
      return c;
    case CocycleKind::psi1_2j:
      if (name.j < 3 || name.j > n) throw input_error("cocycle name: j out of range 3..2p");
      c.add({2, name.j}, 1, one);
      return c;
    case CocycleKind::theta:
      c.add({1, 2}, 1, one);
      for (int k = 1; k <= p - 1; ++k) {
        c.add({2, 2 * k + 1}, 2 * k + 1, phi(k));
        c.add({2, 2 * k + 2}, 2 * k + 2, -(one + phi(k)));
      }
      return c;
  }
  throw input_error("cocycle name: unknown kind");
}

std::vector<CocycleName> catalogue_names_for_weight(int p, int weight) {
  std::vector<CocycleName> names;
  const auto one_index = [&](CocycleKind kind) {
    for (int k = 1; k <= p - 1; ++k) names.push_back({kind, k, 0, 0});
  };
  switch (weight) {
    case -2:
      names.push_back({CocycleKind::psi2_12, 0, 0, 0});
      break;
    case -1:
      one_index(CocycleKind::psi2_2_odd);
      one_index(CocycleKind::psi2_2_even);
      one_index(CocycleKind::psi_odd_12);
      one_index(CocycleKind::psi_even_12);
      break;
    case 0:
      names.push_back({CocycleKind::psi1_12, 0, 0, 0});
      for (int k = 1; k <= p - 1; ++k) names.push_back({CocycleKind::psi_odd_2_odd, k, k, 0});
      for (int k = 1; k <= p - 1; ++k)
        for (int t = 1; t <= p - 1; ++t) {
          if (t == k) continue;
          names.push_back({CocycleKind::psi_odd_2_odd, k, t, 0});
          names.push_back({CocycleKind::psi_even_2_odd, k, t, 0});
          names.push_back({CocycleKind::psi_odd_2_even, k, t, 0});
          names.push_back({CocycleKind::psi_even_2_even, k, t, 0});
        }
      one_index(CocycleKind::psi1_pair);
      one_index(CocycleKind::psi_even_2_odd_unit);
      one_index(CocycleKind::psi_odd_2_even_unit);
      break;
    case 1:
      for (int j = 3; j <= 2 * p; ++j) names.push_back({CocycleKind::psi1_2j, 0, 0, j});
      break;
    default:
      break;
  }
  return names;
}

Cochain projection_onto_x2(int p) {
  Cochain f(1, 2 * p);
  f.add({2}, 2, 1);
  return f;
}

Cochain h2_representative(const FamilyParams& params, int k) {
  return catalogue_cocycle(params, {CocycleKind::psi_odd_2_odd, k, k, 0});
}

SpanReport verify_span(const FamilyParams& params, int q, int weight) {
  if (q != 2) throw input_error("verify_span: only degree 2 has a catalogued basis");
  const HyperplaneReport om = omega_report(params);
  if (!om.generic())
    throw input_error("verify_span: non-generic parameters (the basis statements assume "
                      "genericity); offending: " +
                      (om.violated.empty() ? std::string("?") : om.violated.front().rendered));
  const LieAlgebra f = build_F(params);
  const Grading gr = family_grading(f, params.p);
  const auto names = catalogue_names_for_weight(params.p, weight);
  const GradedBlock block = graded_block(gr, 2, weight);
  std::map<Cochain::Key, std::size_t> pos;
  for (std::size_t i = 0; i < block.keys.size(); ++i) pos.emplace(block.keys[i], i);
  std::vector<std::vector<Rational>> rows;
  for (const auto& name : names) {
    const Cochain c = catalogue_cocycle(params, name);
    if (!ce_differential(f, c).is_zero())
      throw std::logic_error("verify_span: catalogued cochain is not a cocycle: " + name.str());
    std::vector<Rational> row(block.keys.size());
    for (const auto& [key, v] : c.coeffs()) {
      const auto it = pos.find(key);
      if (it == pos.end())
        throw std::logic_error("verify_span: cochain " + name.str() + " leaves weight block");
      row[it->second] = v;
    }
    rows.push_back(std::move(row));
  }
  const Subspace span = Subspace::from_spanning(block.keys.size(), std::move(rows));
  SpanReport rep;
  rep.weight = weight;
  rep.catalogued = static_cast<int>(names.size());
  rep.space_dim = static_cast<int>(graded_cocycle_space(f, gr, 2, weight).dim());
  rep.independent = static_cast<int>(span.dim()) == rep.catalogued;
  rep.spans = static_cast<int>(span.dim()) == rep.space_dim;
  return rep;
}

LieAlgebra build_Der_F(const FamilyParams& params) {
  const HyperplaneReport om = omega_report(params);
  if (om.in_omega1)
    throw input_error("build_Der_F: parameters lie on the first genericity list; the "
                      "derivation algebra has a different structure there");
  const int p = params.p;
  BracketMap br;
  br[{1, 2}][1] = 1;
  for (int k = 1; k <= p - 1; ++k) {
    const Rational& ph = params.phi[static_cast<std::size_t>(k - 1)];
    const int o = 2 * k + 1, e = 2 * k + 2, fgen = 2 * p + k;
    br[{o, e}][1] = 1;
    br[{2, o}][o] = ph;
    br[{2, e}][e] = -(Rational(1) + ph);
    // [X_{2p+k}, X_{2k+1}] = X_{2k+1}: stored on (o, fgen) with the sign flipped
    br[{o, fgen}][o] = -1;
    br[{e, fgen}][e] = 1;
  }
  std::vector<std::string> names = default_basis_names(3 * p - 1);
  return LieAlgebra::checked(3 * p - 1, std::move(br), std::move(names));
}

bool der_f_matches_computed(const FamilyParams& params) {
  const LieAlgebra f = build_F(params);
  const LieAlgebra derf = build_Der_F(params);
  const int n = f.dim();
  const std::size_t vars = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const Subspace der = derivations(f);
  if (der.dim() != static_cast<std::size_t>(3 * params.p - 1)) return false;
  // the basis {ad X_1, ..., ad X_2p, f_1, ..., f_{p-1}} as n*n coordinate rows
  std::vector<std::vector<Rational>> basis;
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> v(vars);
    for (int jj = 1; jj <= n; ++jj)
      for (const auto& [m, c] : f.bracket(i, jj))
        v[static_cast<std::size_t>(jj - 1) * n + (m - 1)] = c;
    basis.push_back(std::move(v));
  }
  for (int k = 1; k <= params.p - 1; ++k) {
    std::vector<Rational> v(vars);
    const int o = 2 * k + 1, e = 2 * k + 2;
    v[static_cast<std::size_t>(o - 1) * n + (o - 1)] = 1;
    v[static_cast<std::size_t>(e - 1) * n + (e - 1)] = -1;
    basis.push_back(std::move(v));
  }
  for (const auto& row : basis)
    if (!der.contains(row)) return false;
  const Subspace spanned = Subspace::from_spanning(vars, basis);
  if (!(spanned == der)) return false; // must be a basis of the derivation algebra
  // commutators in that basis must reproduce build_Der_F's structure constants
  const std::size_t d = basis.size();
  Matrix bmat(vars, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < vars; ++r) bmat.at(r, c) = basis[c][r];
  const auto as_matrix = [&](const std::vector<Rational>& v) {
    Matrix mm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      for (int m = 1; m <= n; ++m)
        mm.at(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(i - 1)) =
            v[static_cast<std::size_t>(i - 1) * n + (m - 1)];
    return mm;
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Matrix ma = as_matrix(basis[a]), mb = as_matrix(basis[b]);
      std::vector<Rational> comm(vars);
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
          Rational acc;
          for (int s = 0; s < n; ++s) {
            acc += ma.at(static_cast<std::size_t>(m), static_cast<std::size_t>(s)) *
                   mb.at(static_cast<std::size_t>(s), static_cast<std::size_t>(i));
            acc -= mb.at(static_cast<std::size_t>(m), static_cast<std::size_t>(s)) *
                   ma.at(static_cast<std::size_t>(s), static_cast<std::size_t>(i));
          }
          comm[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(m)] = acc;
        }
      const auto coords = solve(bmat, comm);
      if (!coords) return false;
      const SparseVec expected = derf.bracket(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
      SparseVec got;
      for (std::size_t x = 0; x < d; ++x)
        if (!(*coords)[x].is_zero()) got.emplace(static_cast<int>(x) + 1, (*coords)[x]);
      if (got != expected) return false;
    }
  return true;
}

BasisChange der_f_basis_change(const FamilyParams& from, const FamilyParams& to) {
  if (from.p != to.p) throw input_error("der_f basis change: p mismatch");
  const int p = from.p;
  const std::size_t n = static_cast<std::size_t>(3 * p - 1);
  Matrix m = Matrix::identity(n);
  for (int i = 1; i <= p - 1; ++i)
    m.at(static_cast<std::size_t>(2 * p + i - 1), 1) =
        to.phi[static_cast<std::size_t>(i - 1)] - from.phi[static_cast<std::size_t>(i - 1)];
  return BasisChange(std::move(m));
}

DeformationReport deformation_stays_in_family(const FamilyParams& params, int k,
                                              const Rational& t) {
  check_k(params.p, k);
  if (!omega_report(params).generic())
    throw input_error("deformation: non-generic parameters");
  const LieAlgebra f = build_F(params);
  const Cochain rep = h2_representative(params, k);
  const LieAlgebra deformed = linear_deformation(f, rep, t);
  FamilyParams target = params;
  target.phi[static_cast<std::size_t>(k - 1)] += t;
  DeformationReport out;
  out.k = k;
  out.t = t;
  out.target = target;
  out.matches_family = deformed.same_structure(build_F(target));
  out.target_in_omega = !omega_report(target).generic();
  return out;
}

int SuiteReport::failed() const {
  int c = 0;
  for (const auto& ch : checks)
    if (ch.status == CheckStatus::fail) ++c;
  return c;
}

int SuiteReport::skipped() const {
  int c = 0;
  for (const auto& ch : checks)
    if (ch.status == CheckStatus::skip) ++c;
  return c;
}

namespace {

std::string dims_to_str(const std::map<int, int>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, d] : m) {
    if (!first) os << " ";
    os << w << ":" << d;
    first = false;
  }
  return os.str();
}

} // namespace

SuiteReport model_verification_suite(const FamilyParams& params) {
  SuiteReport rep;
  rep.params = params;
  rep.omega = omega_report(params);
  const bool generic = rep.omega.generic();
  const int p = params.p;
  const LieAlgebra f = build_F(params);
  const Grading gr = family_grading(f, p);

  const auto add = [&](const std::string& name, CheckStatus st, std::string detail) {
    rep.checks.push_back({name, st, std::move(detail)});
  };
  const auto check = [&](const std::string& name, bool ok, std::string detail) {
    add(name, ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
  };
  const auto skip = [&](const std::string& name) {
    add(name, CheckStatus::skip, "skipped: non-generic parameters");
  };

  // unconditional structure checks
  const auto violations = jacobi_check(f);
  check("jacobi", violations.empty(),
        violations.empty() ? "no violating triples"
                           : std::to_string(violations.size()) + " violating triples");
  const int zdim = static_cast<int>(center(f).dim());
  check("center", zdim == 0, "dim Z = " + std::to_string(zdim));

  // dimensions are computed and reported regardless of genericity
  rep.dims.der = static_cast<int>(derivations(f).dim());
  rep.dims.h1 = h_dim(f, 1);
  const Subspace z2 = cocycle_space(f, 2);
  const Subspace b2 = coboundary_space(f, 2);
  rep.dims.z2_total = static_cast<int>(z2.dim());
  rep.dims.b2_total = static_cast<int>(b2.dim());
  rep.dims.h2 = rep.dims.z2_total - rep.dims.b2_total;
  const auto gdims = graded_dims(f, gr, 2);
  for (const auto& [w, zb] : gdims) {
    rep.dims.graded_z2[w] = zb.first;
    rep.dims.graded_b2[w] = zb.second;
  }

  if (!generic) {
    for (const char* name : {"der_dim", "h1_dim", "graded_z2", "graded_b2", "graded_totals",
                             "h2_dim", "h2_basis", "sq1", "deformation", "der_f"})
      skip(name);
    return rep;
  }

  check("der_dim", rep.dims.der == 3 * p - 1,
        "dim Der = " + std::to_string(rep.dims.der) + ", formula 3p-1 = " +
            std::to_string(3 * p - 1));
  check("h1_dim", rep.dims.h1 == p - 1,
        "dim H^1 = " + std::to_string(rep.dims.h1) + ", formula p-1 = " + std::to_string(p - 1));

  const std::map<int, int> expect_z2 = {
      {-3, 0}, {-2, 1}, {-1, 4 * (p - 1)}, {0, 4 * p * p - 8 * p + 5}, {1, 2 * (p - 1)}};
  check("graded_z2", rep.dims.graded_z2 == expect_z2,
        "Z^2 by weight: " + dims_to_str(rep.dims.graded_z2) + " (formula " +
            dims_to_str(expect_z2) + ")");

  // coboundaries: equality with the cocycles at weights -2, -1, 1 is checked
  // as canonical subspaces, not only dimensions
  bool graded_b_ok = true;
  std::string graded_b_detail;
  for (int w : {-2, -1, 1}) {
    const Subspace zw = graded_cocycle_space(f, gr, 2, w);
    const Subspace bw = graded_coboundary_space(f, gr, 2, w);
    if (!(zw == bw)) {
      graded_b_ok = false;
      graded_b_detail += "B^2_{" + std::to_string(w) + "} != Z^2_{" + std::to_string(w) + "}; ";
    }
  }
  const int z0 = rep.dims.graded_z2.count(0) ? rep.dims.graded_z2.at(0) : 0;
  const int b0 = rep.dims.graded_b2.count(0) ? rep.dims.graded_b2.at(0) : 0;
  if (z0 - b0 != p - 1) {
    graded_b_ok = false;
    graded_b_detail += "dim Z^2_0 - dim B^2_0 = " + std::to_string(z0 - b0) + " != p-1; ";
  }
  check("graded_b2", graded_b_ok,
        graded_b_ok ? "B^2_w = Z^2_w for w in {-2,-1,1}; dim Z^2_0 - dim B^2_0 = p-1"
                    : graded_b_detail);

  int zsum = 0, bsum = 0;
  for (const auto& [w, d] : rep.dims.graded_z2) zsum += d;
  for (const auto& [w, d] : rep.dims.graded_b2) bsum += d;
  check("graded_totals",
        zsum == rep.dims.z2_total && bsum == rep.dims.b2_total,
        "sum_w dim Z^2_w = " + std::to_string(zsum) + " vs " + std::to_string(rep.dims.z2_total) +
            "; sum_w dim B^2_w = " + std::to_string(bsum) + " vs " +
            std::to_string(rep.dims.b2_total));

  check("h2_dim", rep.dims.h2 == p - 1,
        "dim H^2 = " + std::to_string(rep.dims.h2) + ", formula p-1 = " + std::to_string(p - 1));

  // the p-1 diagonal classes must be independent modulo the coboundaries
  {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < b2.dim(); ++r) rows.push_back(b2.basis_vector(r));
    for (int k = 1; k <= p - 1; ++k)
      rows.push_back(cochain_to_dense(h2_representative(params, k)));
    const Subspace joint = Subspace::from_spanning(b2.ambient_dim(), std::move(rows));
    check("h2_basis", joint.dim() == b2.dim() + static_cast<std::size_t>(p - 1),
          "dim(B^2 + span(classes)) = " + std::to_string(joint.dim()) + ", expected " +
              std::to_string(b2.dim() + static_cast<std::size_t>(p - 1)));
  }

  {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= p - 1; ++k) {
      const Cochain repk = h2_representative(params, k);
      if (!nr_square(f, repk).is_zero() || !sq1_vanishes(f, repk)) {
        ok = false;
        detail += "square of representative k=" + std::to_string(k) + " nonzero; ";
      }
    }
    check("sq1", ok, ok ? "psi o psi = 0 for every representative" : detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= p - 1; ++k)
      for (const Rational& t : {Rational(1), Rational(1, 2), Rational(-3)}) {
        const DeformationReport dr = deformation_stays_in_family(params, k, t);
        if (!dr.matches_family) {
          ok = false;
          detail += "k=" + std::to_string(k) + ", t=" + t.str() + " mismatch; ";
        }
      }
    check("deformation", ok,
          ok ? "F(phi) + t psi = F(phi + t e_k) entrywise for t in {1, 1/2, -3}" : detail);
  }

  {
    const LieAlgebra derf = build_Der_F(params);
    const int dd = static_cast<int>(derivations(derf).dim());
    const int zc = static_cast<int>(center(derf).dim());
    const int h1 = h_dim(derf, 1);
    const auto steps = solvable_steps(derf);
    const bool ok = derf.dim() == 3 * p - 1 && zc == 0 && h1 == 0 && steps == 3;
    std::ostringstream os;
    os << "dim = " << derf.dim() << ", dim Der = " << dd << ", dim Z = " << zc
       << ", dim H^1 = " << h1 << ", solvable steps = " << (steps ? std::to_string(*steps) : "-");
    check("der_f", ok, os.str());
  }

  return rep;
}

H1BoundReport h1_bound_check(const LieAlgebra& g, const FamilyParams& params) {
  if (g.dim() != 2 * params.p)
    throw input_error("h1 bound: algebra dimension must be 2p");
  if (omega_report(params).in_omega1)
    throw input_error("h1 bound: non-generic parameters (first list)");
  H1BoundReport rep;
  rep.p = params.p;
  rep.center_dim = static_cast<int>(center(g).dim());
  rep.compatible = rep.center_dim == 0;
  rep.der_dim = static_cast<int>(derivations(g).dim());
  rep.bound = params.p - 2;
  if (rep.compatible) {
    // faithful adjoint: dim B^1 = dim g, so dim H^1 = dim Der - 2p
    rep.h1 = rep.der_dim - 2 * params.p;
    rep.bound_holds = rep.h1 <= rep.bound;
  }
  rep.contraction = contraction_conditions(g, build_F(params));
  rep.proper_contraction_possible = rep.contraction.all();
  return rep;
}

FamilyParams random_generic_params(int p, std::uint64_t seed) {
  DetRng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> phi;
    phi.reserve(static_cast<std::size_t>(p - 1));
    for (int i = 0; i < p - 1; ++i) phi.emplace_back(rng.next_in(2, 50));
    FamilyParams cand(p, std::move(phi));
    if (omega_report(cand).generic()) return cand;
  }
  throw std::logic_error("random_generic_params: rejection sampling failed (should not happen)");
}

} // namespace liecoh
