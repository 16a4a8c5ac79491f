#include "liecoh/exterior.hpp"

#include <algorithm>

#include "liecoh/errors.hpp"
#include "liecoh/rng.hpp"

namespace liecoh {

namespace {

int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a + 1 < idx.size(); ++a)
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      } else if (idx[b] == idx[b + 1]) {
        return 0;
      }
    }
  return sign;
}

} // namespace

KForm::KForm(int degree, int ambient_dim) : degree_(degree), ambient_(ambient_dim) {
  if (degree < 0 || ambient_dim < 0) throw input_error("k-form: negative degree or dimension");
}

KForm KForm::basis_dual(int ambient_dim, int i) {
  KForm f(1, ambient_dim);
  f.add({i}, 1);
  return f;
}

void KForm::add(std::vector<int> idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != degree_) throw input_error("k-form: index count != degree");
  for (int i : idx)
    if (i < 1 || i > ambient_) throw input_error("k-form: index out of range");
  if (c.is_zero()) return;
  const int sign = sort_sign(idx);
  if (sign == 0) return;
  Rational& slot = coeffs_[idx];
  slot += (sign > 0) ? c : -c;
  if (slot.is_zero()) coeffs_.erase(idx);
}

Rational KForm::coeff(std::vector<int> idx) const {
  const int sign = sort_sign(idx);
  if (sign == 0) return Rational();
  const auto it = coeffs_.find(idx);
  if (it == coeffs_.end()) return Rational();
  return (sign > 0) ? it->second : -it->second;
}

KForm KForm::operator-() const {
  KForm out(degree_, ambient_);
  for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, -c);
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.ambient() != b.ambient()) throw input_error("wedge: ambient dimension mismatch");
  const int n = a.ambient();
  const int deg = a.degree() + b.degree();
  if (deg > n) return KForm(n, n); // zero top form by convention
  KForm out(deg, n);
  for (const auto& [ia, ca] : a.coeffs())
    for (const auto& [ib, cb] : b.coeffs()) {
      std::vector<int> idx;
      idx.reserve(ia.size() + ib.size());
      idx.insert(idx.end(), ia.begin(), ia.end());
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(std::move(idx), ca * cb);
    }
  return out;
}

KForm differential_1form(const LieAlgebra& g, const KForm& omega, DiffSign sign) {
  if (omega.degree() != 1) throw input_error("differential: form degree must be 1");
  if (omega.ambient() != g.dim()) throw input_error("differential: dimension mismatch");
  KForm out(2, g.dim());
  for (const auto& [key, vec] : g.brackets()) {
    // d omega (X_i, X_j) = -omega([X_i, X_j]) under the default sign
    Rational v;
    for (const auto& [k, c] : vec) v += c * omega.coeff({k});
    if (sign == DiffSign::negative) v = -v;
    out.add({key.first, key.second}, v);
  }
  return out;
}

bool is_contact_form(const LieAlgebra& g, const KForm& omega, DiffSign sign) {
  if (g.dim() % 2 == 0) throw input_error("contact form: dimension must be odd");
  if (omega.degree() != 1 || omega.ambient() != g.dim())
    throw input_error("contact form: need a 1-form on the algebra");
  const int n = (g.dim() - 1) / 2;
  const KForm d = differential_1form(g, omega, sign);
  KForm acc = omega;
  for (int i = 0; i < n; ++i) acc = wedge(acc, d);
  return !acc.is_zero();
}

namespace {

bool symplectic_differential(const LieAlgebra& g, const KForm& omega, DiffSign sign) {
  const int p = g.dim() / 2;
  const KForm d = differential_1form(g, omega, sign);
  if (d.is_zero()) return false;
  KForm acc = d;
  for (int i = 1; i < p; ++i) acc = wedge(acc, d);
  return !acc.is_zero();
}

std::optional<KForm> witness_search(const LieAlgebra& g, std::uint64_t seed, int trials,
                                    bool (*pred)(const LieAlgebra&, const KForm&, DiffSign),
                                    DiffSign sign) {
  const int n = g.dim();
  for (int i = 1; i <= n; ++i) {
    const KForm cand = KForm::basis_dual(n, i);
    if (pred(g, cand, sign)) return cand;
  }
  DetRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    KForm cand(1, n);
    for (int i = 1; i <= n; ++i) cand.add({i}, Rational(rng.next_in(-10, 10)));
    if (pred(g, cand, sign)) return cand;
  }
  return std::nullopt;
}

bool frob_pred(const LieAlgebra& g, const KForm& f, DiffSign s) {
  return symplectic_differential(g, f, s);
}

bool contact_pred(const LieAlgebra& g, const KForm& f, DiffSign s) {
  return is_contact_form(g, f, s);
}

} // namespace

std::optional<KForm> frobenius_witness(const LieAlgebra& g, std::uint64_t seed, int trials,
                                       DiffSign sign) {
  if (g.dim() % 2 != 0) throw input_error("frobenius witness: dimension must be even");
  return witness_search(g, seed, trials, frob_pred, sign);
}

std::optional<KForm> contact_witness(const LieAlgebra& g, std::uint64_t seed, int trials,
                                     DiffSign sign) {
  if (g.dim() % 2 == 0) throw input_error("contact witness: dimension must be odd");
  return witness_search(g, seed, trials, contact_pred, sign);
}

} // namespace liecoh
