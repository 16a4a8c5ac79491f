#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liecoh/cochain.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

/// Z^q = ker(delta: C^q -> C^{q+1}), in canonical C^q coordinates.
Subspace cocycle_space(const LieAlgebra& g, int q);
/// B^q = im(delta: C^{q-1} -> C^q); B^0 = 0. Asserts B^q within Z^q.
Subspace coboundary_space(const LieAlgebra& g, int q);
/// dim H^q = dim Z^q - dim B^q.
int h_dim(const LieAlgebra& g, int q);

/// Integer weights on the basis making the law weight-homogeneous:
/// c_ij^k != 0 requires w(X_k) = w(X_i) + w(X_j). Checked on attach.
class Grading {
public:
  Grading(const LieAlgebra& g, std::vector<int> weights);
  int dim() const { return static_cast<int>(weights_.size()); }
  int weight(int basis_index) const;
  /// w(target) - sum of argument weights.
  int cochain_weight(const Cochain::Key& key) const;
  const std::vector<int>& weights() const { return weights_; }

private:
  std::vector<int> weights_;
};

/// Positions (into the canonical C^q basis) of the weight-w block, with the
/// block's basis keys in the canonical order.
struct GradedBlock {
  int weight = 0;
  std::vector<std::size_t> positions;
  std::vector<Cochain::Key> keys;
};
GradedBlock graded_block(const Grading& gr, int q, int weight);
std::vector<int> occurring_weights(const Grading& gr, int q);

/// Z^q_w in the block-local coordinates of graded_block(gr, q, w).
/// Asserts that the differential preserves the weight.
Subspace graded_cocycle_space(const LieAlgebra& g, const Grading& gr, int q, int weight);
/// B^q_w = image of the weight-w block of C^{q-1}, block-local coordinates.
Subspace graded_coboundary_space(const LieAlgebra& g, const Grading& gr, int q, int weight);

/// weight -> (dim Z^q_w, dim B^q_w) for all weights occurring in C^q.
std::map<int, std::pair<int, int>> graded_dims(const LieAlgebra& g, const Grading& gr, int q);

/// Some f with delta f = psi, or nullopt when [psi] != 0. The preimage is the
/// canonical particular solution (free variables zero). Throws input_error
/// when psi is not a cocycle.
std::optional<Cochain> is_coboundary(const LieAlgebra& g, const Cochain& psi);

/// (psi o psi)(x,y,z) = sum over cyclic permutations of psi(psi(x,y), z).
/// For the law itself this is the Jacobiator.
Cochain nr_square(const LieAlgebra& g, const Cochain& psi);

/// True iff the class of psi o psi vanishes in H^3 (the first obstruction to
/// integrating the infinitesimal deformation psi). No 1/2 normalization is
/// applied; class vanishing is unaffected. Requires delta psi = 0.
bool sq1_vanishes(const LieAlgebra& g, const Cochain& psi);

/// The law mu + t*psi. Throws structural_error (with the violating triples)
/// when the deformed law fails the Jacobi identity.
LieAlgebra linear_deformation(const LieAlgebra& g, const Cochain& psi, const Rational& t);

} // namespace liecoh
