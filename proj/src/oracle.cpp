#include "adet/oracle.hpp"

#include "adet/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace adet {

MultiPoly MultiPoly::variable(int n, int i, int j) {
  MultiPoly p(n);
  Exponent e(static_cast<std::size_t>(n * n), 0);
  e[static_cast<std::size_t>(i * n + j)] = 1;
  p.terms_.emplace(std::move(e), PolyQ(1));
  return p;
}

MultiPoly MultiPoly::constant(int n, const PolyQ& c) {
  MultiPoly p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n * n), 0), c);
  return p;
}

PolyQ MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? PolyQ() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const PolyQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const PolyQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.n_, b.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(e[k] + eb[k]);
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(n_, PolyQ(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::specialize(const Rational& a) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) out.add_term(e, PolyQ(c.eval(a)));
  return out;
}

std::vector<int> MultiPoly::weight_of(const Exponent& e) const {
  std::vector<int> w(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) w[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i * n_ + j)];
  return w;
}

Rational adet_eval(const RatMatrix& A, const Rational& a, int cap) {
  if (A.rows() != A.cols()) throw SizeMismatch("adet_eval: matrix is not square");
  const int m = static_cast<int>(A.rows());
  check_cap(m, cap, "adet_eval");
  // Group the permutation products by nu, then evaluate the polynomial in a.
  std::vector<Rational> by_nu(static_cast<std::size_t>(m) + 1);
  std::vector<int> s(static_cast<std::size_t>(m));
  std::iota(s.begin(), s.end(), 0);
  Rational prod;
  do {
    prod = 1;
    for (int i = 0; i < m && prod != 0; ++i) prod *= A(static_cast<std::size_t>(s[static_cast<std::size_t>(i)]), static_cast<std::size_t>(i));
    if (prod != 0) by_nu[static_cast<std::size_t>(nu(Permutation(s)))] += prod;
  } while (std::next_permutation(s.begin(), s.end()));
  return PolyQ(std::move(by_nu)).eval(a);
}

MultiPoly adet_symbolic(int n, int cap) {
  check_cap(n, cap, "adet_symbolic");
  MultiPoly out(n);
  for (const auto& s : all_permutations(n)) {
    Exponent e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) ++e[static_cast<std::size_t>(s(i) * n + i)];
    out.add_term(e, PolyQ::monomial(nu(s)));
  }
  return out;
}

MultiPoly D_of(int n, int l, const ClassFunctionH& phi, int cap) {
  MultiPoly out(n);
  for (const auto& h : enumerate_H(n, l, cap)) {
    const auto comps = theta(h, n, l);
    Exponent e(static_cast<std::size_t>(n * n), 0);
    for (int q = 0; q < n; ++q)
      for (const auto& s : comps) ++e[static_cast<std::size_t>(s(q) * n + q)];
    HClassKey key;
    for (const auto& s : comps) key.push_back(cycle_type(s));
    out.add_term(e, phi(key));
  }
  return out;
}

MultiPoly apply_E(int i, int j, const MultiPoly& f) {
  const int n = f.n();
  if (i < 0 || j < 0 || i >= n || j >= n) throw SizeMismatch("apply_E: index out of range");
  MultiPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    for (int s = 0; s < n; ++s) {
      const auto from = static_cast<std::size_t>(j * n + s);
      const int k = e[from];
      if (k == 0) continue;
      Exponent e2 = e;
      --e2[from];
      ++e2[static_cast<std::size_t>(i * n + s)];
      out.add_term(e2, c * Rational(k));
    }
  }
  return out;
}

namespace {

/// Divides out the gcd of the coefficients and makes the leading one monic.
void normalize(MultiPoly& w) {
  PolyQ g;
  for (const auto& [e, c] : w.terms()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  MultiPoly out(w.n());
  const Rational lead = div_exact(w.terms().rbegin()->second, g).leading();
  for (const auto& [e, c] : w.terms()) out.add_term(e, div_exact(c, g) * Rational(1 / lead));
  w = std::move(out);
}

/// Echelon form keyed by leading monomial; fraction-free over Q[alpha].
struct Echelon {
  std::map<Exponent, MultiPoly> rows;

  /// Reduces w; inserts and returns true if it is independent of the rows.
  bool insert(MultiPoly w) {
    auto it = w.terms().rbegin();
    while (it != w.terms().rend()) {
      const Exponent mono = it->first;
      auto row = rows.find(mono);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const PolyQ wc = it->second;
      const PolyQ& lead = row->second.terms().rbegin()->second;
      w *= lead;
      w -= row->second * wc;
      if (w.is_zero()) return false;
      normalize(w);
      it = std::make_reverse_iterator(w.terms().lower_bound(mono));
    }
    if (w.is_zero()) return false;
    normalize(w);
    const Exponent pivot = w.terms().rbegin()->first;
    rows.emplace(pivot, std::move(w));
    return true;
  }
};

std::vector<int> shifted_weight(std::vector<int> w, int i, int j) {
  ++w[static_cast<std::size_t>(i)];
  --w[static_cast<std::size_t>(j)];
  return w;
}

} // namespace

std::size_t ModuleBasis::dimension() const {
  std::size_t d = 0;
  for (const auto& [w, rows] : by_weight) d += rows.size();
  return d;
}

std::vector<MultiPoly> ModuleBasis::generators() const {
  std::vector<MultiPoly> out;
  for (const auto& [w, rows] : by_weight) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::vector<Exponent> ModuleBasis::ambient_monomials() const {
  // Column s of X carries total degree l, split over the n rows.
  std::vector<std::vector<int>> splits;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (row == n - 1) {
      cur[static_cast<std::size_t>(row)] = left;
      splits.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(row)] = v;
      self(self, row + 1, left - v);
    }
  };
  rec(rec, 0, l);
  std::vector<Exponent> out{Exponent(static_cast<std::size_t>(n * n), 0)};
  for (int s = 0; s < n; ++s) {
    std::vector<Exponent> next;
    for (const auto& e : out)
      for (const auto& split : splits) {
        Exponent e2 = e;
        for (int r = 0; r < n; ++r)
          e2[static_cast<std::size_t>(r * n + s)] = static_cast<std::uint8_t>(split[static_cast<std::size_t>(r)]);
        next.push_back(std::move(e2));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyMatrix ModuleBasis::coefficient_matrix() const {
  const auto gens = generators();
  const auto monos = ambient_monomials();
  std::map<Exponent, std::size_t> col;
  for (std::size_t c = 0; c < monos.size(); ++c) col.emplace(monos[c], c);
  PolyMatrix m(gens.size(), monos.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& [e, c] : gens[r].terms()) m(r, col.at(e)) = c;
  return m;
}

ModuleBasis cyclic_closure(int n, int l, std::optional<Rational> alpha, int cap) {
  if (cap < 0) cap = alpha ? kOracleSpecializedCap : kOracleGenericCap;
  check_cap(n * l, cap, "cyclic_closure");
  MultiPoly seed = adet_symbolic(n).pow(static_cast<unsigned>(l));
  if (alpha) seed = seed.specialize(*alpha);

  ModuleBasis basis{n, l, alpha, {}};
  std::map<std::vector<int>, Echelon> spaces;
  std::deque<std::pair<std::vector<int>, MultiPoly>> queue;
  if (!seed.is_zero()) {
    const auto w = seed.weight_of(seed.terms().begin()->first);
    if (spaces[w].insert(seed)) queue.emplace_back(w, seed);
  }
  // Breadth-first over E_ij in (i, j) order; stops once nothing new appears.
  while (!queue.empty()) {
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        MultiPoly img = apply_E(i, j, v);
        if (img.is_zero()) continue;
        auto w2 = shifted_weight(w, i, j);
        auto& space = spaces[w2];
        if (!space.insert(img)) continue;
        // The raw image spans the same new direction as the stored row.
        queue.emplace_back(std::move(w2), std::move(img));
      }
  }
  for (auto& [w, space] : spaces) {
    auto& rows = basis.by_weight[w];
    for (auto& [pivot, row] : space.rows) rows.push_back(std::move(row));
  }
  return basis;
}

std::size_t hwv_multiplicity(const ModuleBasis& basis, const Partition& lambda) {
  if (lambda.size() != basis.n * basis.l) throw SizeMismatch("hwv_multiplicity: |lambda| != n*l");
  if (lambda.length() > basis.n) throw SizeMismatch("hwv_multiplicity: l(lambda) > n");
  auto it = basis.by_weight.find(lambda.padded(basis.n));
  if (it == basis.by_weight.end()) return 0;
  const auto& rows = it->second;

  // Stack the images under every raising operator; the kernel is the space
  // of highest weight vectors.
  std::map<std::pair<int, Exponent>, std::size_t> col;
  std::vector<std::vector<std::pair<std::size_t, PolyQ>>> images(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int i = 0; i + 1 < basis.n; ++i) {
      const MultiPoly raised = apply_E(i, i + 1, rows[r]);
      for (const auto& [e, c] : raised.terms()) {
        auto [pos, inserted] = col.try_emplace({i, e}, col.size());
        images[r].emplace_back(pos->second, c);
      }
    }
  PolyMatrix m(rows.size(), col.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : images[r]) m(r, c) = v;
  return rows.size() - generic_rank(std::move(m));
}

Integer weyl_dimension(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  const auto p = lambda.padded(n);
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

} // namespace adet
