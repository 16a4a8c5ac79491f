#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecoh/cochain.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// Location of a member of the model family: p >= 2 and the parameter
/// vector (phi_1, ..., phi_{p-1}).
struct FamilyParams {
  int p = 2;
  std::vector<Rational> phi;

  FamilyParams() = default;
  FamilyParams(int p_, std::vector<Rational> phi_);
  std::string phi_str() const;
};

/// The 2p-dimensional model algebra F(p, phi):
///   [X_1, X_2] = X_1,            [X_{2k+1}, X_{2k+2}] = X_1,
///   [X_2, X_{2k+1}] = phi_k X_{2k+1},
///   [X_2, X_{2k+2}] = -(1 + phi_k) X_{2k+2},   1 <= k <= p-1.
/// Valid (Jacobi) for every rational phi; centerless; graded by the weights
/// below with all structure constants of weight zero.
LieAlgebra build_F(const FamilyParams& params);

/// w(X_1) = 2, w(X_2) = 0, w(X_k) = 1 for k >= 3.
std::vector<int> family_weights(int p);
Grading family_grading(const LieAlgebra& f, int p);

/// One vanished genericity polynomial.
struct HyperplaneHit {
  std::string family;  ///< e.g. "1+phi_i-phi_j"
  int list = 1;        ///< 1 or 2: which union the family belongs to
  int i = 0, j = 0;    ///< indices used (j = 0 for one-index families)
  std::string rendered; ///< e.g. "1+phi_1-phi_2 = 0"
};

struct HyperplaneReport {
  bool in_omega1 = false;
  bool in_omega2 = false;
  std::vector<HyperplaneHit> violated;
  bool generic() const { return !in_omega1 && !in_omega2; }
};

/// Evaluates every genericity hyperplane polynomial at phi and reports the
/// vanishing ones. The second list's "2phi_i - phi_j" family is evaluated for
/// i != j only; all other two-index families include i = j.
HyperplaneReport omega_report(const FamilyParams& params);

/// The named 2-cocycles of the model family.
enum class CocycleKind {
  psi2_12,             ///< weight -2 generator
  psi2_2_odd,          ///< (k)
  psi2_2_even,         ///< (k)
  psi_odd_12,          ///< (k)
  psi_even_12,         ///< (k)            -- weight -1 families
  psi1_12,             ///< weight 0, single
  psi_odd_2_odd,       ///< (k, t), t = k allowed (the diagonal spans H^2)
  psi_even_2_odd,      ///< (k, t), k != t
  psi_odd_2_even,      ///< (k, t), k != t
  psi_even_2_even,     ///< (k, t), k != t
  psi1_pair,           ///< (k)
  psi_even_2_odd_unit, ///< (k)
  psi_odd_2_even_unit, ///< (k)            -- weight 0 families
  psi1_2j,             ///< (j), 3 <= j <= 2p: weight 1 family
  theta,               ///< the distinguished weight-0 coboundary
};

struct CocycleName {
  CocycleKind kind;
  int k = 0, t = 0, j = 0;
  std::string str() const;
};

int cocycle_weight(CocycleKind kind);
/// The literal cochain table for the name. Every result satisfies
/// delta psi = 0; theta is additionally a coboundary (delta of the projection
/// onto X_2). Invalid indices throw input_error.
Cochain catalogue_cocycle(const FamilyParams& params, const CocycleName& name);
/// All catalogue names of the given weight, in a fixed deterministic order
/// (theta is not included; it is not part of the cocycle bases).
std::vector<CocycleName> catalogue_names_for_weight(int p, int weight);
/// The degree-1 cochain projecting onto X_2 (whose coboundary is theta).
Cochain projection_onto_x2(int p);
/// The H^2 representative psi^{2k+1}_{2,2k+1}.
Cochain h2_representative(const FamilyParams& params, int k);

struct SpanReport {
  int weight = 0;
  int catalogued = 0;
  int space_dim = 0;
  bool independent = false;
  bool spans = false;
  bool pass() const { return independent && spans; }
};

/// Checks that the catalogued weight-w cocycles are independent and span
/// Z^2_w. Refuses non-generic parameters (the statements assume genericity).
SpanReport verify_span(const FamilyParams& params, int q, int weight);

/// The (3p-1)-dimensional derivation algebra of F(p, phi), built from its
/// structure equations: the model brackets plus generators X_{2p+k} with
/// [X_{2p+k}, X_{2k+1}] = X_{2k+1}, [X_{2p+k}, X_{2k+2}] = -X_{2k+2}.
/// Refuses phi in the first genericity list.
LieAlgebra build_Der_F(const FamilyParams& params);

/// True iff the abstract algebra above matches the computed derivation
/// algebra of F(p, phi) in the basis {ad X_1..ad X_2p, f_1..f_{p-1}},
/// structure constant by structure constant.
bool der_f_matches_computed(const FamilyParams& params);

/// The change of basis X_2 -> X_2 + sum_i (phi'_i - phi_i) X_{2p+i} carrying
/// build_Der_F(p, phi) onto build_Der_F(p, phi').
BasisChange der_f_basis_change(const FamilyParams& from, const FamilyParams& to);

struct DeformationReport {
  int k = 0;
  Rational t;
  bool matches_family = false; ///< structure constants equal those of F(phi + t e_k)
  FamilyParams target;
  bool target_in_omega = false;
};

/// Deforms F(phi) along psi^{2k+1}_{2,2k+1} by t and compares entrywise with
/// F(phi + t e_k). Requires generic phi and 1 <= k <= p-1.
DeformationReport deformation_stays_in_family(const FamilyParams& params, int k,
                                              const Rational& t);

enum class CheckStatus { pass, fail, skip };

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct SuiteDims {
  int der = 0, h1 = 0, h2 = 0, z2_total = 0, b2_total = 0;
  std::map<int, int> graded_z2, graded_b2;
};

struct SuiteReport {
  FamilyParams params;
  HyperplaneReport omega;
  SuiteDims dims;
  std::vector<SuiteCheck> checks;
  int failed() const;
  int skipped() const;
  bool all_passed() const { return failed() == 0; }
};

/// Runs the whole battery of model checks at the given parameters: Jacobi,
/// centerlessness, the dimension formulas, the graded cocycle/coboundary
/// tables, independence of the H^2 basis classes, vanishing of the squares,
/// the deformation identities and the derivation-algebra properties. On
/// non-generic parameters only the unconditional checks run; the rest are
/// reported as skipped and the dimensions are still computed and reported.
SuiteReport model_verification_suite(const FamilyParams& params);

struct H1BoundReport {
  int p = 0;
  int center_dim = 0;
  bool compatible = false;   ///< center is zero (necessary for the property)
  int der_dim = 0;
  int h1 = 0;                ///< dim Der - 2p, valid when compatible
  int bound = 0;             ///< p - 2
  bool bound_holds = false;
  ContractionReport contraction;
  bool proper_contraction_possible = false; ///< all three contraction conditions
};

/// Necessary-condition check for a user-supplied 2p-dimensional algebra
/// claimed to degenerate onto F(p, phi). Requires generic phi (first list).
H1BoundReport h1_bound_check(const LieAlgebra& g, const FamilyParams& params);

/// Seeded sampling of generic integer parameters: phi_k uniform in [2, 50],
/// rejecting anything flagged by omega_report.
FamilyParams random_generic_params(int p, std::uint64_t seed);

} // namespace liecoh
