#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

/// Sparse vector in the algebra: 1-based basis index -> coefficient.
using SparseVec = std::map<int, Rational>;

/// Structure-constant table: only pairs i < j are stored (antisymmetry is
/// implicit), absent pairs mean zero bracket.
using BracketMap = std::map<std::pair<int, int>, SparseVec>;

struct JacobiViolation {
  int i, j, k;      ///< 1-based triple, i < j < k
  SparseVec defect; ///< sum of the three cyclic double brackets
};

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// basis X_1..X_n (1-based, matching the usual dual-form labels).
/// Immutable after construction.
class LieAlgebra {
public:
  LieAlgebra() = default;

  /// No Jacobi validation; shape only. Deliberately broken tables are legal
  /// here so the checker itself can be tested.
  static LieAlgebra raw(int dim, BracketMap brackets, std::vector<std::string> names = {});
  /// Validating constructor: throws structural_error listing the violating
  /// triples when the table fails the Jacobi identity.
  static LieAlgebra checked(int dim, BracketMap brackets, std::vector<std::string> names = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const BracketMap& brackets() const { return brackets_; }

  /// [X_i, X_j] with the sign handled for any index order; empty for i = j.
  SparseVec bracket(int i, int j) const;
  std::vector<Rational> bracket_dense(int i, int j) const;
  /// Bilinear extension of the bracket to coordinate vectors.
  std::vector<Rational> bracket_of(const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) const;

  /// Structure-constant equality (dimension + bracket tables); names ignored.
  bool same_structure(const LieAlgebra& other) const;

private:
  int dim_ = 0;
  std::vector<std::string> names_;
  BracketMap brackets_;
};

std::vector<std::string> default_basis_names(int dim);

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g);

/// { x : [x, y] = 0 for all y }.
Subspace center(const LieAlgebra& g);
/// Span of all bracket values [X_i, X_j].
Subspace derived_subalgebra(const LieAlgebra& g);
/// D^0 = g, D^{i+1} = [D^i, D^i]; the list ends at the first term that is
/// zero or that stopped shrinking.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// Least s with D^s = 0, or nullopt when the series stabilizes nonzero.
std::optional<int> solvable_steps(const LieAlgebra& g);

/// All f with f[x,y] = [fx,y] + [x,fy], as a subspace of Q^(n*n) with the
/// coordinate layout (i-1)*n + (k-1) <-> coefficient of X_k in f(X_i).
/// Internally computed along two independent paths (the derivation equations
/// and the degree-1 Chevalley-Eilenberg kernel) which must agree.
Subspace derivations(const LieAlgebra& g);

/// Invertible change of basis; columns of the matrix are the new basis
/// vectors in old coordinates. Construction fails on singular input.
class BasisChange {
public:
  explicit BasisChange(Matrix p);
  const Matrix& matrix() const { return p_; }
  const Matrix& inverse() const { return pinv_; }
  std::size_t dim() const { return p_.rows(); }

private:
  Matrix p_, pinv_;
};

LieAlgebra apply_basis_change(const LieAlgebra& g, const BasisChange& p);
/// True iff transporting g through p gives exactly h's structure constants.
bool is_isomorphism_witness(const LieAlgebra& g, const LieAlgebra& h, const BasisChange& p);

/// Necessary conditions for g to be a contraction limit of h:
/// dim Der must strictly grow, the derived algebra weakly shrink and the
/// center weakly grow when passing from g to the limit h.
struct ContractionReport {
  bool der_ok = false;     ///< dim Der(g) <  dim Der(h)
  bool derived_ok = false; ///< dim [g,g]  >= dim [h,h]
  bool center_ok = false;  ///< dim Z(g)   <= dim Z(h)
  int der_g = 0, der_h = 0;
  int derived_g = 0, derived_h = 0;
  int center_g = 0, center_h = 0;
  bool all() const { return der_ok && derived_ok && center_ok; }
};
ContractionReport contraction_conditions(const LieAlgebra& g, const LieAlgebra& h);

/// Maurer-Cartan data: d(omega_k) as a combination of basis monomials
/// omega_i ^ omega_j with i < j.
struct MaurerCartan {
  int dim = 0;
  std::map<int, std::map<std::pair<int, int>, Rational>> d;
};

/// Builds the algebra whose brackets satisfy d(omega_k)(X_i, X_j) =
/// omega_k([X_i, X_j]), i.e. c_ij^k is the coefficient of omega_i ^ omega_j
/// in d(omega_k). Validates the Jacobi identity.
LieAlgebra from_maurer_cartan(const MaurerCartan& mc, std::vector<std::string> names = {});

/// g (+) h on a concatenated basis.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

std::string describe(const JacobiViolation& v);

} // namespace liecoh
