#include "liecoh/cochain.hpp"

#include <algorithm>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

/// Sorts idx ascending, returns the permutation sign, or 0 for repeats.
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

Cochain::Cochain(int degree, int dim) : degree_(degree), dim_(dim) {
  if (degree < 0 || dim < 0) throw input_error("cochain: negative degree or dimension");
}

void Cochain::add(std::vector<int> args, int target, const Rational& c) {
  if (static_cast<int>(args.size()) != degree_)
    throw input_error("cochain: argument count != degree");
  if (target < 1 || target > dim_) throw input_error("cochain: target out of range");
  for (int a : args)
    if (a < 1 || a > dim_) throw input_error("cochain: argument index out of range");
  if (c.is_zero()) return;
  const int sign = sort_sign(args);
  if (sign == 0) return;
  Key key{std::move(args), target};
  Rational& slot = coeffs_[key];
  slot += (sign > 0) ? c : -c;
  if (slot.is_zero()) coeffs_.erase(key);
}

Rational Cochain::coeff(std::vector<int> args, int target) const {
  const int sign = sort_sign(args);
  if (sign == 0) return Rational();
  const auto it = coeffs_.find(Key{std::move(args), target});
  if (it == coeffs_.end()) return Rational();
  return (sign > 0) ? it->second : -it->second;
}

SparseVec Cochain::value(const std::vector<int>& args) const {
  std::vector<int> sorted = args;
  const int sign = sort_sign(sorted);
  SparseVec out;
  if (sign == 0) return out;
  for (int k = 1; k <= dim_; ++k) {
    const auto it = coeffs_.find(Key{sorted, k});
    if (it != coeffs_.end()) out.emplace(k, (sign > 0) ? it->second : -it->second);
  }
  return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (degree_ != o.degree_ || dim_ != o.dim_)
    throw input_error("cochain: shape mismatch in sum");
  for (const auto& [key, c] : o.coeffs_) {
    Rational& slot = coeffs_[key];
    slot += c;
    if (slot.is_zero()) coeffs_.erase(key);
  }
  return *this;
}

Cochain& Cochain::scale(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, c] : coeffs_) c *= s;
  return *this;
}

Cochain ce_differential(const LieAlgebra& g, const Cochain& f) {
  const int n = g.dim();
  const int q = f.degree();
  Cochain out(q + 1, n);
  if (q >= n) return out;
  for (const auto& [key, c] : f.coeffs()) {
    const std::vector<int>& s = key.first;
    const int target = key.second;
    // Bracket-the-value terms: T = s u {a}, contribution (-1)^pos(a) [X_a, X_target].
    for (int a = 1; a <= n; ++a) {
      if (std::binary_search(s.begin(), s.end(), a)) continue;
      const int pos = static_cast<int>(std::lower_bound(s.begin(), s.end(), a) - s.begin());
      const int sgn = (pos % 2 == 0) ? 1 : -1;
      const SparseVec br = g.bracket(a, target);
      if (br.empty()) continue;
      std::vector<int> t = s;
      t.insert(t.begin() + pos, a);
      for (const auto& [m, mu] : br) out.add(t, m, (sgn > 0 ? c : -c) * mu);
    }
    // Bracket-the-arguments terms: argument s[r] produced as a component of
    // [X_a, X_b]; the sign is (-1)^{i+j} for the positions of a, b in the new
    // tuple times (-1)^r for moving s[r] to the front of the old one.
    for (std::size_t r = 0; r < s.size(); ++r) {
      const int m = s[r];
      std::vector<int> rest;
      rest.reserve(s.size() - 1);
      for (int x : s)
        if (x != m) rest.push_back(x);
      const int sgn_r = (r % 2 == 0) ? 1 : -1;
      for (const auto& [pair, vec] : g.brackets()) {
        const auto [a, b] = pair;
        const auto it = vec.find(m);
        if (it == vec.end()) continue;
        if (std::binary_search(rest.begin(), rest.end(), a) ||
            std::binary_search(rest.begin(), rest.end(), b))
          continue;
        std::vector<int> t = rest;
        const int pa = static_cast<int>(std::lower_bound(t.begin(), t.end(), a) - t.begin());
        t.insert(t.begin() + pa, a);
        const int pb = static_cast<int>(std::lower_bound(t.begin(), t.end(), b) - t.begin());
        t.insert(t.begin() + pb, b);
        const int i = static_cast<int>(std::lower_bound(t.begin(), t.end(), a) - t.begin());
        const int j = static_cast<int>(std::lower_bound(t.begin(), t.end(), b) - t.begin());
        const int sgn = ((i + j) % 2 == 0) ? 1 : -1;
        out.add(t, target, Rational(sgn * sgn_r) * it->second * c);
      }
    }
  }
  return out;
}

std::size_t cochain_space_dim(int n, int q) {
  if (q < 0 || q > n) return 0;
  // binom(n, q), exact in 64 bits for every dimension this library handles
  unsigned long long b = 1;
  for (int i = 1; i <= q; ++i) b = b * static_cast<unsigned long long>(n - q + i) / i;
  return static_cast<std::size_t>(b) * static_cast<std::size_t>(n);
}

std::vector<Cochain::Key> cochain_basis(int n, int q) {
  std::vector<Cochain::Key> basis;
  if (q < 0 || q > n) return basis;
  basis.reserve(cochain_space_dim(n, q));
  std::vector<int> tuple(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    for (int k = 1; k <= n; ++k) basis.emplace_back(tuple, k);
    // next increasing q-tuple in lexicographic order
    int i = q - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - (q - 1 - i)) --i;
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < q; ++j)
      tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
  }
  return basis;
}

std::vector<Rational> cochain_to_dense(const Cochain& f) {
  const auto basis = cochain_basis(f.dim(), f.degree());
  std::vector<Rational> out(basis.size());
  // both the basis and the coefficient map are in (tuple, target) lex order
  auto it = f.coeffs().begin();
  for (std::size_t b = 0; b < basis.size() && it != f.coeffs().end(); ++b) {
    if (basis[b] == it->first) {
      out[b] = it->second;
      ++it;
    }
  }
  if (it != f.coeffs().end())
    throw input_error("cochain: coefficient outside the canonical basis");
  return out;
}

Cochain cochain_from_dense(int degree, int n, const std::vector<Rational>& coords) {
  const auto basis = cochain_basis(n, degree);
  if (coords.size() != basis.size())
    throw input_error("cochain: dense coordinate length mismatch");
  Cochain f(degree, n);
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (!coords[b].is_zero()) f.add(basis[b].first, basis[b].second, coords[b]);
  return f;
}

Matrix ce_matrix(const LieAlgebra& g, int q) {
  const int n = g.dim();
  const auto colsB = cochain_basis(n, q);
  const auto rowsB = cochain_basis(n, q + 1);
  std::map<Cochain::Key, std::size_t> rindex;
  for (std::size_t r = 0; r < rowsB.size(); ++r) rindex.emplace(rowsB[r], r);
  Matrix m(rowsB.size(), colsB.size());
  for (std::size_t c = 0; c < colsB.size(); ++c) {
    Cochain e(q, n);
    e.add(colsB[c].first, colsB[c].second, 1);
    const Cochain d = ce_differential(g, e);
    for (const auto& [key, v] : d.coeffs()) m.at(rindex.at(key), c) = v;
  }
  return m;
}

Cochain ad_cochain(const LieAlgebra& g, int i) {
  if (i < 1 || i > g.dim()) throw input_error("ad: index out of range");
  Cochain f(1, g.dim());
  for (int j = 1; j <= g.dim(); ++j)
    for (const auto& [m, c] : g.bracket(i, j)) f.add({j}, m, c);
  return f;
}

Cochain bracket_cochain(const LieAlgebra& g) {
  Cochain f(2, g.dim());
  for (const auto& [key, vec] : g.brackets())
    for (const auto& [m, c] : vec) f.add({key.first, key.second}, m, c);
  return f;
}

} // namespace liecoh
