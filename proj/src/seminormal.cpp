#include "adet/seminormal.hpp"

#include "adet/errors.hpp"

#include <map>
#include <queue>

namespace adet {

namespace {

// Row-adjacent generators s_j of the row group K of the (l^n) block tableau.
std::vector<int> row_generators(int n, int l) {
  std::vector<int> out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c + 1 < l; ++c) out.push_back(r * l + c);
  return out;
}

} // namespace

SeminormalRep build_rep(const Partition& lambda, int cap) {
  const int m = lambda.size();
  check_cap(m, cap, "build_rep");
  SeminormalRep rep;
  rep.shape = lambda;
  rep.syt = standard_tableaux(lambda);
  const std::size_t dim = rep.syt.size();

  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<int>> cols(dim, std::vector<int>(static_cast<std::size_t>(m)));
  for (std::size_t t = 0; t < dim; ++t) {
    index.emplace(rep.syt[t], t);
    std::vector<int> fill(static_cast<std::size_t>(lambda.length()), 0);
    for (int k = 0; k < m; ++k) {
      const auto row = static_cast<std::size_t>(rep.syt[t][static_cast<std::size_t>(k)]);
      cols[t][static_cast<std::size_t>(k)] = fill[row]++;
    }
  }

  rep.gens.resize(m > 0 ? static_cast<std::size_t>(m - 1) : 0);
  for (int i = 0; i + 1 < m; ++i) {
    auto& gen = rep.gens[static_cast<std::size_t>(i)];
    const auto a = static_cast<std::size_t>(i);
    const auto b = a + 1;
    for (std::size_t t = 0; t < dim; ++t) {
      const int ra = rep.syt[t][a], rb = rep.syt[t][b];
      const int ca = cols[t][a], cb = cols[t][b];
      if (ra == rb) continue;
      if (ca == cb) {
        gen.negated.push_back(t);
        continue;
      }
      const int r = (cb - rb) - (ca - ra);
      if (r < 0) continue;  // recorded from the partner tableau
      auto swapped = rep.syt[t];
      std::swap(swapped[a], swapped[b]);
      gen.pairs.push_back({t, index.at(swapped), Rational(1, r)});
    }
  }

  // The invariant form is unique up to scale on an irreducible; propagate it
  // from the first tableau across the pair relations d_T' = (1 - 1/r^2) d_T.
  rep.gram.assign(dim, 0);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(dim);
  for (const auto& gen : rep.gens)
    for (const auto& p : gen.pairs) {
      const Rational f = 1 - p.inv_r * p.inv_r;
      adj[p.first].emplace_back(p.second, f);
      adj[p.second].emplace_back(p.first, Rational(1 / f));
    }
  std::vector<bool> seen(dim, false);
  std::queue<std::size_t> queue;
  if (dim > 0) {
    rep.gram[0] = 1;
    seen[0] = true;
    queue.push(0);
  }
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop();
    for (const auto& [u, f] : adj[t]) {
      if (seen[u]) continue;
      seen[u] = true;
      rep.gram[u] = rep.gram[t] * f;
      queue.push(u);
    }
  }
  return rep;
}

RatMatrix SeminormalRep::generator_matrix(int i) const {
  RatMatrix g = RatMatrix::identity(dim());
  const auto& gen = gens.at(static_cast<std::size_t>(i));
  for (auto t : gen.negated) g(t, t) = -1;
  for (const auto& p : gen.pairs) {
    g(p.first, p.first) = p.inv_r;
    g(p.first, p.second) = 1 - p.inv_r * p.inv_r;
    g(p.second, p.first) = 1;
    g(p.second, p.second) = -p.inv_r;
  }
  return g;
}

void apply_generator(const SeminormalRep& rep, int i, std::span<Rational> v) {
  const auto& gen = rep.gens[static_cast<std::size_t>(i)];
  for (auto t : gen.negated) mpq_neg(v[t].get_mpq_t(), v[t].get_mpq_t());
  Rational x, y, tmp;
  for (const auto& p : gen.pairs) {
    x = v[p.first];
    y = v[p.second];
    // v_T <- x/r + (1 - 1/r^2) y,  v_T' <- x - y/r
    tmp = y * p.inv_r;
    v[p.second] = x - tmp;
    v[p.first] = x * p.inv_r + y - tmp * p.inv_r;
  }
}

void apply_word(const SeminormalRep& rep, std::span<const int> word, std::span<Rational> v) {
  for (int j : word) apply_generator(rep, j, v);
}

RatMatrix rep_of(const SeminormalRep& rep, const Permutation& g) {
  if (g.degree() != rep.degree()) throw SizeMismatch("rep_of: permutation degree mismatch");
  const auto word = adjacent_word(g);
  const std::size_t dim = rep.dim();
  RatMatrix out(dim, dim);
  std::vector<Rational> col(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::fill(col.begin(), col.end(), Rational(0));
    col[c] = 1;
    apply_word(rep, word, col);
    for (std::size_t r = 0; r < dim; ++r) out(r, c) = col[r];
  }
  return out;
}

InvariantBasis invariant_basis(const SeminormalRep& rep, int n, int l) {
  const std::size_t dim = rep.dim();
  std::vector<bool> forced_zero(dim, false);
  // Edge (u, factor): v_u = factor * v_t.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(dim);
  for (int j : row_generators(n, l)) {
    if (j + 1 >= rep.degree()) break;
    const auto& gen = rep.gens[static_cast<std::size_t>(j)];
    for (auto t : gen.negated) forced_zero[t] = true;
    for (const auto& p : gen.pairs) {
      // Fixed vectors of the 2x2 block satisfy v_T = (1 + 1/r) v_T'.
      const Rational c = 1 + p.inv_r;
      adj[p.second].emplace_back(p.first, c);
      adj[p.first].emplace_back(p.second, Rational(1 / c));
    }
  }

  std::vector<std::vector<Rational>> columns;
  std::vector<bool> seen(dim, false);
  std::vector<Rational> value(dim);
  for (std::size_t root = 0; root < dim; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component{root};
    bool alive = true;
    seen[root] = true;
    value[root] = 1;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const auto t = component[k];
      if (forced_zero[t]) alive = false;
      for (const auto& [u, f] : adj[t]) {
        const Rational expected = value[t] * f;
        if (!seen[u]) {
          seen[u] = true;
          value[u] = expected;
          component.push_back(u);
        } else if (value[u] != expected) {
          alive = false;
        }
      }
    }
    if (!alive) continue;
    std::vector<Rational> col(dim);
    for (auto t : component) col[t] = value[t];
    columns.push_back(std::move(col));
  }

  InvariantBasis basis{rep.shape, RatMatrix(dim, columns.size())};
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) basis.columns(r, c) = columns[c][r];
  return basis;
}

InvariantBasis invariant_basis_dense(const SeminormalRep& rep, int n, int l) {
  const std::size_t dim = rep.dim();
  std::vector<int> gens;
  for (int j : row_generators(n, l))
    if (j + 1 < rep.degree()) gens.push_back(j);
  RatMatrix stacked(gens.size() * dim, dim);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto m = rep.generator_matrix(gens[g]) - RatMatrix::identity(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) stacked(g * dim + r, c) = m(r, c);
  }
  return {rep.shape, nullspace(std::move(stacked))};
}

RatMatrix restricted_gram(const SeminormalRep& rep, const RatMatrix& basis) {
  RatMatrix db = basis;
  for (std::size_t r = 0; r < db.rows(); ++r)
    for (std::size_t c = 0; c < db.cols(); ++c) db(r, c) *= rep.gram[r];
  return basis.transpose() * db;
}

} // namespace adet
