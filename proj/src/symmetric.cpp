#include "adet/symmetric.hpp"

#include "adet/errors.hpp"
#include "adet/kernels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace adet {

void check_cap(int m, int cap, const std::string& what) {
  if (m > cap)
    throw CapExceeded(what + ": degree " + std::to_string(m) + " exceeds the cap " +
                      std::to_string(cap) + " (raise it with --max-size)");
}

BlockTableau::BlockTableau(int n_, int l_) : n(n_), l(l_) {
  if (n < 1 || l < 1) throw SizeMismatch("block tableau needs n, l >= 1");
}

namespace {

/// Every product of independent permutations of the given point blocks.
std::vector<Permutation> block_product(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> partial{Permutation::identity(m).images()};
  for (const auto& block : blocks) {
    const auto local = all_permutations(static_cast<int>(block.size()));
    std::vector<std::vector<int>> next;
    next.reserve(partial.size() * local.size());
    for (const auto& base : partial)
      for (const auto& s : local) {
        auto img = base;
        for (std::size_t t = 0; t < block.size(); ++t)
          img[static_cast<std::size_t>(block[t])] = block[static_cast<std::size_t>(s(static_cast<int>(t)))];
        next.push_back(std::move(img));
      }
    partial = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(partial.size());
  for (auto& img : partial) out.emplace_back(std::move(img));
  return out;
}

} // namespace

std::vector<Permutation> enumerate_K(int n, int l, int cap) {
  const BlockTableau t(n, l);
  check_cap(t.size(), cap, "enumerate_K");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < t.size(); ++x) rows[static_cast<std::size_t>(t.row_of(x))].push_back(x);
  return block_product(t.size(), rows);
}

std::vector<Permutation> enumerate_H(int n, int l, int cap) {
  const BlockTableau t(n, l);
  check_cap(t.size(), cap, "enumerate_H");
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(l));
  for (int x = 0; x < t.size(); ++x) cols[static_cast<std::size_t>(t.col_of(x))].push_back(x);
  return block_product(t.size(), cols);
}

std::vector<Permutation> theta(const Permutation& h, int n, int l) {
  if (h.degree() != n * l) throw NotInH("theta: degree is not n*l");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(l));
  for (int p = 0; p < l; ++p) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      const int y = h(q * l + p);
      if (y % l != p) throw NotInH("theta: " + to_string(h) + " is not in H");
      img[static_cast<std::size_t>(q)] = y / l;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

Permutation theta_inverse(const std::vector<Permutation>& components, int n, int l) {
  if (static_cast<int>(components.size()) != l) throw SizeMismatch("theta_inverse: need l components");
  std::vector<int> img(static_cast<std::size_t>(n * l));
  for (int p = 0; p < l; ++p) {
    const auto& s = components[static_cast<std::size_t>(p)];
    if (s.degree() != n) throw SizeMismatch("theta_inverse: components must lie in S_n");
    for (int q = 0; q < n; ++q) img[static_cast<std::size_t>(q * l + p)] = s(q) * l + p;
  }
  return Permutation(std::move(img));
}

HClassKey h_class(const Permutation& h, int n, int l) {
  HClassKey key;
  for (const auto& s : theta(h, n, l)) key.push_back(cycle_type(s));
  return key;
}

ClassFunctionH ClassFunctionH::alpha_power() {
  return ClassFunctionH("alpha^nu", [](const HClassKey& key) {
    int v = 0;
    for (const auto& mu : key) v += mu.size() - mu.length();
    return PolyQ::monomial(v);
  });
}

ClassFunctionH ClassFunctionH::delta() {
  return ClassFunctionH("delta", [](const HClassKey& key) {
    for (const auto& mu : key)
      if (mu.size() != mu.length()) return PolyQ();
    return PolyQ(1);
  });
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterCache {
  std::shared_mutex mutex;
  std::map<CharKey, Integer> values;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t start);

Integer mn_cached(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t start) {
  if (start == mu.size()) return lambda.empty() ? 1 : 0;
  CharKey key{lambda, std::vector<int>(mu.begin() + static_cast<long>(start), mu.end())};
  auto& cache = character_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  Integer v = mn_rec(lambda, mu, start);
  std::unique_lock lock(cache.mutex);
  cache.values.try_emplace(std::move(key), v);
  return v;
}

// Rim hooks are removed on the beta-set: moving a bead from b to b - r.
Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t start) {
  const int r = mu[start];
  const int k = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + k - 1 - i;
  Integer total = 0;
  for (int i = 0; i < k; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta) between += c > target && c < b;
    auto moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> next;
    for (int j = 0; j < k; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (k - 1 - j);
      if (part > 0) next.push_back(part);
    }
    Integer v = mn_cached(next, mu, start + 1);
    if (between % 2) total -= v;
    else total += v;
  }
  return total;
}

} // namespace

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw SizeMismatch("character: |lambda| != |mu|");
  return mn_cached(lambda.parts(), mu.parts(), 0);
}

Integer dim_f(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
  return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

namespace {

// Number of ways to peel n horizontal strips of size l off lambda.
Integer kostka_rec(const std::vector<int>& lambda, int strips, int l,
                   std::map<std::vector<int>, Integer>& memo) {
  if (strips == 0) return lambda.empty() ? 1 : 0;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  Integer total = 0;
  // nu_i ranges over [lambda_{i+1}, lambda_i] with sum(lambda - nu) = l.
  std::vector<int> nu(lambda.size());
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == lambda.size()) {
      if (left != 0) return;
      std::vector<int> trimmed = nu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += kostka_rec(trimmed, strips - 1, l, memo);
      return;
    }
    const int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= lo; --v) {
      const int used = lambda[i] - v;
      if (used > left) break;
      nu[i] = v;
      self(self, i + 1, left - used);
    }
  };
  rec(rec, 0, l);
  memo.emplace(lambda, total);
  return total;
}

} // namespace

Integer kostka(const Partition& lambda, int n, int l) {
  if (lambda.size() != n * l) throw SizeMismatch("kostka: |lambda| != n*l");
  if (lambda.length() > n) return 0;
  std::map<std::vector<int>, Integer> memo;
  return kostka_rec(lambda.parts(), n, l, memo);
}

std::vector<std::vector<int>> standard_tableaux(const Partition& lambda) {
  const int m = lambda.size();
  std::vector<std::vector<int>> out;
  std::vector<int> fill(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<int> rows(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      out.push_back(rows);
      return;
    }
    for (int i = 0; i < lambda.length(); ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (fill[si] < lambda.part(i) && (i == 0 || fill[si - 1] > fill[si])) {
        ++fill[si];
        rows[static_cast<std::size_t>(k)] = i;
        self(self, k + 1);
        --fill[si];
      }
    }
  };
  rec(rec, 0);
  return out;
}

Rational zonal(const Partition& lambda, const Permutation& g, const std::vector<Permutation>& K) {
  if (K.empty()) throw SizeMismatch("zonal: empty row group");
  if (lambda.size() != g.degree()) throw SizeMismatch("zonal: |lambda| != degree of g");
  return kernels::zonal_from_histogram(lambda, kernels::coset_cycle_types(K, g), K.size());
}

Rational zonal(const Partition& lambda, const Permutation& g, int n, int l, int cap) {
  if (lambda.size() != n * l) throw SizeMismatch("zonal: |lambda| != n*l");
  if (g.degree() != n * l) throw SizeMismatch("zonal: g is not in S_{nl}");
  return zonal(lambda, g, enumerate_K(n, l, cap));
}

Permutation g_s(int l, int s) {
  if (s < 0 || s > l) throw SizeMismatch("g_s: need 0 <= s <= l");
  auto img = Permutation::identity(2 * l).images();
  for (int i = 0; i < s; ++i) std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(l + i)]);
  return Permutation(std::move(img));
}

} // namespace adet
