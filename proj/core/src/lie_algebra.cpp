#include "liecoh/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "liecoh/cochain.hpp"
#include "liecoh/errors.hpp"

namespace liecoh {

std::vector<std::string> default_basis_names(int dim) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (int i = 1; i <= dim; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

namespace {

void add_sparse(SparseVec& into, const SparseVec& v, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [k, c] : v) {
    Rational& slot = into[k];
    slot += scale * c;
    if (slot.is_zero()) into.erase(k);
  }
}

} // namespace

LieAlgebra LieAlgebra::raw(int dim, BracketMap brackets, std::vector<std::string> names) {
  if (dim < 0) throw input_error("lie algebra: negative dimension");
  LieAlgebra g;
  g.dim_ = dim;
  g.names_ = names.empty() ? default_basis_names(dim) : std::move(names);
  if (static_cast<int>(g.names_.size()) != dim)
    throw input_error("lie algebra: names length != dim");
  for (auto& [key, vec] : brackets) {
    const auto [i, j] = key;
    if (i < 1 || j < 1 || i > dim || j > dim)
      throw input_error("lie algebra: bracket index out of range");
    if (i >= j) throw input_error("lie algebra: bracket keys must satisfy i < j");
    SparseVec pruned;
    for (const auto& [k, c] : vec) {
      if (k < 1 || k > dim) throw input_error("lie algebra: bracket target out of range");
      if (!c.is_zero()) pruned.emplace(k, c);
    }
    if (!pruned.empty()) g.brackets_.emplace(key, std::move(pruned));
  }
  return g;
}

LieAlgebra LieAlgebra::checked(int dim, BracketMap brackets, std::vector<std::string> names) {
  LieAlgebra g = raw(dim, std::move(brackets), std::move(names));
  const auto violations = jacobi_check(g);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "jacobi identity fails on " << violations.size() << " triple(s):";
    for (std::size_t t = 0; t < violations.size() && t < 5; ++t)
      os << " " << describe(violations[t]);
    if (violations.size() > 5) os << " ...";
    throw structural_error(os.str());
  }
  return g;
}

SparseVec LieAlgebra::bracket(int i, int j) const {
  if (i == j) return {};
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return {};
  if (!flip) return it->second;
  SparseVec out;
  for (const auto& [k, c] : it->second) out.emplace(k, -c);
  return out;
}

std::vector<Rational> LieAlgebra::bracket_dense(int i, int j) const {
  std::vector<Rational> v(static_cast<std::size_t>(dim_));
  for (const auto& [k, c] : bracket(i, j)) v[static_cast<std::size_t>(k - 1)] = c;
  return v;
}

std::vector<Rational> LieAlgebra::bracket_of(const std::vector<Rational>& x,
                                             const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw input_error("lie algebra: bracket_of dimension mismatch");
  SparseVec acc;
  for (const auto& [key, vec] : brackets_) {
    const auto [i, j] = key;
    const Rational w = x[static_cast<std::size_t>(i - 1)] * y[static_cast<std::size_t>(j - 1)] -
                       x[static_cast<std::size_t>(j - 1)] * y[static_cast<std::size_t>(i - 1)];
    add_sparse(acc, vec, w);
  }
  std::vector<Rational> out(static_cast<std::size_t>(dim_));
  for (const auto& [k, c] : acc) out[static_cast<std::size_t>(k - 1)] = c;
  return out;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  return dim_ == other.dim_ && brackets_ == other.brackets_;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const int n = g.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        SparseVec defect;
        const int tri[3][2] = {{i, j}, {j, k}, {k, i}};
        const int third[3] = {k, i, j};
        for (int t = 0; t < 3; ++t)
          for (const auto& [m, c] : g.bracket(tri[t][0], tri[t][1]))
            add_sparse(defect, g.bracket(m, third[t]), c);
        if (!defect.empty()) out.push_back({i, j, k, std::move(defect)});
      }
  return out;
}

std::string describe(const JacobiViolation& v) {
  std::ostringstream os;
  os << "(" << v.i << "," << v.j << "," << v.k << ") -> ";
  bool first = true;
  for (const auto& [m, c] : v.defect) {
    if (!first) os << " + ";
    os << c.str() << "*X" << m;
    first = false;
  }
  return os.str();
}

Subspace center(const LieAlgebra& g) {
  const int n = g.dim();
  // x central iff [x, X_j] = 0 for every j: one row per (j, component m).
  std::vector<std::vector<Rational>> rows;
  for (int j = 1; j <= n; ++j)
    for (int m = 1; m <= n; ++m) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      bool nonzero = false;
      for (int i = 1; i <= n; ++i) {
        const SparseVec br = g.bracket(i, j);
        const auto it = br.find(m);
        if (it != br.end()) {
          row[static_cast<std::size_t>(i - 1)] = it->second;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::full(static_cast<std::size_t>(n));
  return kernel_basis(Matrix::from_rows(static_cast<std::size_t>(n), std::move(rows)));
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& [key, vec] : g.brackets()) {
    std::vector<Rational> v(static_cast<std::size_t>(g.dim()));
    for (const auto& [k, c] : vec) v[static_cast<std::size_t>(k - 1)] = c;
    rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(static_cast<std::size_t>(g.dim()), std::move(rows));
}

namespace {

Subspace bracket_span(const LieAlgebra& g, const Subspace& s) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      rows.push_back(g.bracket_of(s.basis_vector(a), s.basis_vector(b)));
  return Subspace::from_spanning(static_cast<std::size_t>(g.dim()), std::move(rows));
}

} // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(static_cast<std::size_t>(g.dim()))};
  while (true) {
    const Subspace next = bracket_span(g, series.back());
    if (next.dim() == series.back().dim()) {
      if (next.dim() != 0) series.push_back(next); // stabilized nonzero
      break;
    }
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::optional<int> solvable_steps(const LieAlgebra& g) {
  const auto series = derived_series(g);
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

Subspace derivations(const LieAlgebra& g) {
  const int n = g.dim();
  const std::size_t vars = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  // Path 1: the derivation equations f([X_i,X_j]) = [f X_i, X_j] + [X_i, f X_j],
  // one row per (pair i<j, component m), unknowns a_i^k at (i-1)*n + (k-1).
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const SparseVec bij = g.bracket(i, j);
      for (int m = 1; m <= n; ++m) {
        std::vector<Rational> row(vars);
        bool nonzero = false;
        // f([X_i,X_j]) component m: sum_l c_ij^l a_l^m
        for (const auto& [l, c] : bij) {
          row[static_cast<std::size_t>(l - 1) * n + (m - 1)] += c;
          nonzero = true;
        }
        // -[f X_i, X_j] component m: -sum_k a_i^k c_kj^m
        for (int k = 1; k <= n; ++k) {
          const SparseVec bkj = g.bracket(k, j);
          const auto it = bkj.find(m);
          if (it == bkj.end()) continue;
          row[static_cast<std::size_t>(i - 1) * n + (k - 1)] -= it->second;
          nonzero = true;
        }
        // -[X_i, f X_j] component m: -sum_k a_j^k c_ik^m
        for (int k = 1; k <= n; ++k) {
          const SparseVec bik = g.bracket(i, k);
          const auto it = bik.find(m);
          if (it == bik.end()) continue;
          row[static_cast<std::size_t>(j - 1) * n + (k - 1)] -= it->second;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  const Subspace direct =
      rows.empty() ? Subspace::full(vars)
                   : kernel_basis(Matrix::from_rows(vars, std::move(rows)));
  // Path 2: kernel of the degree-1 Chevalley-Eilenberg differential, computed
  // through the generic cochain machinery. Permanent internal oracle.
  const Subspace viadelta = kernel_basis(ce_matrix(g, 1));
  if (!(direct == viadelta))
    throw std::logic_error("derivations: the two computation paths disagree");
  return direct;
}

BasisChange::BasisChange(Matrix p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols()) throw input_error("basis change: matrix not square");
  const std::size_t n = p_.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = p_.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const RrefResult rr = rref(aug);
  // invertible iff all pivots land in the left block, turning [P|I] into [I|P^-1]
  for (std::size_t r = 0; r < rr.rank; ++r)
    if (rr.pivots[r] != r) throw input_error("basis change: singular matrix");
  if (rr.rank < n) throw input_error("basis change: singular matrix");
  pinv_ = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) pinv_.at(r, c) = rr.matrix.at(r, n + c);
}

LieAlgebra apply_basis_change(const LieAlgebra& g, const BasisChange& p) {
  const int n = g.dim();
  if (static_cast<int>(p.dim()) != n)
    throw input_error("basis change: dimension mismatch with algebra");
  BracketMap out;
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> yi(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      yi[static_cast<std::size_t>(a)] =
          p.matrix().at(static_cast<std::size_t>(a), static_cast<std::size_t>(i - 1));
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Rational> yj(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a)
        yj[static_cast<std::size_t>(a)] =
            p.matrix().at(static_cast<std::size_t>(a), static_cast<std::size_t>(j - 1));
      const std::vector<Rational> old = g.bracket_of(yi, yj);
      const std::vector<Rational> neu = p.inverse().apply(old);
      SparseVec vec;
      for (int k = 0; k < n; ++k)
        if (!neu[static_cast<std::size_t>(k)].is_zero())
          vec.emplace(k + 1, neu[static_cast<std::size_t>(k)]);
      if (!vec.empty()) out.emplace(std::make_pair(i, j), std::move(vec));
    }
  }
  return LieAlgebra::raw(n, std::move(out), g.names());
}

bool is_isomorphism_witness(const LieAlgebra& g, const LieAlgebra& h, const BasisChange& p) {
  if (g.dim() != h.dim()) throw input_error("isomorphism witness: dimension mismatch");
  return apply_basis_change(g, p).same_structure(h);
}

ContractionReport contraction_conditions(const LieAlgebra& g, const LieAlgebra& h) {
  if (g.dim() != h.dim()) throw input_error("contraction conditions: dimension mismatch");
  ContractionReport r;
  r.der_g = static_cast<int>(derivations(g).dim());
  r.der_h = static_cast<int>(derivations(h).dim());
  r.derived_g = static_cast<int>(derived_subalgebra(g).dim());
  r.derived_h = static_cast<int>(derived_subalgebra(h).dim());
  r.center_g = static_cast<int>(center(g).dim());
  r.center_h = static_cast<int>(center(h).dim());
  r.der_ok = r.der_g < r.der_h;
  r.derived_ok = r.derived_g >= r.derived_h;
  r.center_ok = r.center_g <= r.center_h;
  return r;
}

LieAlgebra from_maurer_cartan(const MaurerCartan& mc, std::vector<std::string> names) {
  if (mc.dim < 0) throw input_error("maurer-cartan: negative dimension");
  BracketMap brackets;
  for (const auto& [k, terms] : mc.d) {
    if (k < 1 || k > mc.dim) throw input_error("maurer-cartan: form index out of range");
    for (const auto& [pair, c] : terms) {
      const auto [i, j] = pair;
      if (i < 1 || j < 1 || i > mc.dim || j > mc.dim || i >= j)
        throw input_error("maurer-cartan: wedge monomial indices must satisfy 1 <= i < j <= dim");
      if (c.is_zero()) continue;
      Rational& slot = brackets[{i, j}][k];
      slot += c;
      if (slot.is_zero()) brackets[{i, j}].erase(k);
    }
  }
  return LieAlgebra::checked(mc.dim, std::move(brackets), std::move(names));
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const int n1 = g.dim();
  BracketMap out = g.brackets();
  for (const auto& [key, vec] : h.brackets()) {
    SparseVec shifted;
    for (const auto& [k, c] : vec) shifted.emplace(k + n1, c);
    out.emplace(std::make_pair(key.first + n1, key.second + n1), std::move(shifted));
  }
  std::vector<std::string> names = g.names();
  for (const auto& nm : h.names()) names.push_back(nm + "'");
  return LieAlgebra::raw(n1 + h.dim(), std::move(out), std::move(names));
}

} // namespace liecoh
