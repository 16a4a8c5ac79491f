#include "liecoh/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liecoh/errors.hpp"

namespace liecoh {

Subspace cocycle_space(const LieAlgebra& g, int q) {
  const std::size_t dimc = cochain_space_dim(g.dim(), q);
  if (dimc == 0) return Subspace::zero(0);
  if (q >= g.dim()) return Subspace::full(dimc); // delta into C^{q+1} = 0
  return kernel_basis(ce_matrix(g, q));
}

Subspace coboundary_space(const LieAlgebra& g, int q) {
  const std::size_t dimc = cochain_space_dim(g.dim(), q);
  if (q <= 0 || dimc == 0) return Subspace::zero(dimc);
  const Matrix m = ce_matrix(g, q - 1); // C^{q-1} -> C^q
  const Subspace b = Subspace::from_spanning(m.transposed());
  // B^q within Z^q: every generator must again be a cocycle (delta^2 = 0).
  if (q < g.dim()) {
    for (std::size_t r = 0; r < b.dim(); ++r) {
      const Cochain f = cochain_from_dense(q, g.dim(), b.basis_vector(r));
      if (!ce_differential(g, f).is_zero())
        throw std::logic_error("coboundary_space: B^q not inside Z^q (delta^2 != 0?)");
    }
  }
  return b;
}

int h_dim(const LieAlgebra& g, int q) {
  return static_cast<int>(cocycle_space(g, q).dim()) -
         static_cast<int>(coboundary_space(g, q).dim());
}

Grading::Grading(const LieAlgebra& g, std::vector<int> weights) : weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != g.dim())
    throw input_error("grading: weights length != dim");
  for (const auto& [key, vec] : g.brackets()) {
    const auto [i, j] = key;
    for (const auto& [k, c] : vec) {
      if (weight(k) != weight(i) + weight(j)) {
        std::ostringstream os;
        os << "grading: law not weight-homogeneous at c_{" << i << "," << j << "}^" << k
           << " (w=" << weight(i) << "+" << weight(j) << " -> " << weight(k) << ")";
        throw input_error(os.str());
      }
    }
  }
}

int Grading::weight(int basis_index) const {
  if (basis_index < 1 || basis_index > dim())
    throw input_error("grading: basis index out of range");
  return weights_[static_cast<std::size_t>(basis_index - 1)];
}

int Grading::cochain_weight(const Cochain::Key& key) const {
  int w = weight(key.second);
  for (int a : key.first) w -= weight(a);
  return w;
}

GradedBlock graded_block(const Grading& gr, int q, int weight) {
  GradedBlock b;
  b.weight = weight;
  const auto basis = cochain_basis(gr.dim(), q);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (gr.cochain_weight(basis[i]) == weight) {
      b.positions.push_back(i);
      b.keys.push_back(basis[i]);
    }
  return b;
}

std::vector<int> occurring_weights(const Grading& gr, int q) {
  std::set<int> ws;
  for (const auto& key : cochain_basis(gr.dim(), q)) ws.insert(gr.cochain_weight(key));
  return {ws.begin(), ws.end()};
}

namespace {

// delta restricted to the weight-w block of C^q, written over the weight-w
// block of C^{q+1}. Throws if a column leaks outside its weight.
Matrix graded_delta_block(const LieAlgebra& g, const Grading& gr, int q, int weight,
                          const GradedBlock& domain) {
  const GradedBlock target = graded_block(gr, q + 1, weight);
  std::map<Cochain::Key, std::size_t> rindex;
  for (std::size_t r = 0; r < target.keys.size(); ++r) rindex.emplace(target.keys[r], r);
  Matrix m(target.keys.size(), domain.keys.size());
  for (std::size_t c = 0; c < domain.keys.size(); ++c) {
    Cochain e(q, g.dim());
    e.add(domain.keys[c].first, domain.keys[c].second, 1);
    const Cochain d = ce_differential(g, e);
    for (const auto& [key, v] : d.coeffs()) {
      if (gr.cochain_weight(key) != weight)
        throw std::logic_error("graded delta: differential does not preserve the weight");
      m.at(rindex.at(key), c) = v;
    }
  }
  return m;
}

} // namespace

Subspace graded_cocycle_space(const LieAlgebra& g, const Grading& gr, int q, int weight) {
  const GradedBlock domain = graded_block(gr, q, weight);
  if (domain.keys.empty()) return Subspace::zero(0);
  if (q >= g.dim()) return Subspace::full(domain.keys.size());
  return kernel_basis(graded_delta_block(g, gr, q, weight, domain));
}

Subspace graded_coboundary_space(const LieAlgebra& g, const Grading& gr, int q, int weight) {
  const GradedBlock block = graded_block(gr, q, weight);
  if (q <= 0 || block.keys.empty()) return Subspace::zero(block.keys.size());
  const GradedBlock below = graded_block(gr, q - 1, weight);
  if (below.keys.empty()) return Subspace::zero(block.keys.size());
  const Matrix m = graded_delta_block(g, gr, q - 1, weight, below);
  return Subspace::from_spanning(m.transposed());
}

std::map<int, std::pair<int, int>> graded_dims(const LieAlgebra& g, const Grading& gr, int q) {
  std::map<int, std::pair<int, int>> out;
  for (int w : occurring_weights(gr, q)) {
    const int z = static_cast<int>(graded_cocycle_space(g, gr, q, w).dim());
    const int b = static_cast<int>(graded_coboundary_space(g, gr, q, w).dim());
    out.emplace(w, std::make_pair(z, b));
  }
  return out;
}

std::optional<Cochain> is_coboundary(const LieAlgebra& g, const Cochain& psi) {
  if (!ce_differential(g, psi).is_zero())
    throw input_error("is_coboundary: input is not a cocycle");
  const int q = psi.degree();
  if (psi.is_zero()) return Cochain(q - 1 >= 0 ? q - 1 : 0, g.dim());
  if (q <= 0) return std::nullopt; // nonzero element of B^0 = 0 is impossible
  const Matrix m = ce_matrix(g, q - 1);
  const auto x = solve(m, cochain_to_dense(psi));
  if (!x) return std::nullopt;
  return cochain_from_dense(q - 1, g.dim(), *x);
}

Cochain nr_square(const LieAlgebra& g, const Cochain& psi) {
  if (psi.degree() != 2) throw input_error("nr_square: cochain degree must be 2");
  const int n = g.dim();
  Cochain out(3, n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        SparseVec acc;
        const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        for (const auto& t : cyc) {
          const SparseVec inner = psi.value({t[0], t[1]});
          if (inner.empty()) continue;
          for (const auto& [m, cm] : inner)
            for (const auto& [k, ck] : psi.value({m, t[2]})) {
              Rational& slot = acc[k];
              slot += cm * ck;
              if (slot.is_zero()) acc.erase(k);
            }
        }
        for (const auto& [k, v] : acc) out.add({a, b, c}, k, v);
      }
  return out;
}

bool sq1_vanishes(const LieAlgebra& g, const Cochain& psi) {
  if (!ce_differential(g, psi).is_zero())
    throw input_error("sq1: input is not a cocycle");
  const Cochain sq = nr_square(g, psi);
  if (sq.is_zero()) return true;
  const Matrix m = ce_matrix(g, 2);
  return solve(m, cochain_to_dense(sq)).has_value();
}

LieAlgebra linear_deformation(const LieAlgebra& g, const Cochain& psi, const Rational& t) {
  if (psi.degree() != 2 || psi.dim() != g.dim())
    throw input_error("linear_deformation: need a 2-cochain on the same space");
  BracketMap out = g.brackets();
  if (!t.is_zero()) {
    for (const auto& [key, c] : psi.coeffs()) {
      const auto& args = key.first;
      Rational& slot = out[{args[0], args[1]}][key.second];
      slot += t * c;
      if (slot.is_zero()) {
        out[{args[0], args[1]}].erase(key.second);
        if (out[{args[0], args[1]}].empty()) out.erase({args[0], args[1]});
      }
    }
  }
  return LieAlgebra::checked(g.dim(), std::move(out), g.names());
}

} // namespace liecoh
