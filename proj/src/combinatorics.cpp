#include "adet/combinatorics.hpp"

#include "adet/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace adet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw SizeMismatch("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw SizeMismatch("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Integer Partition::centralizer_order() const {
  std::map<int, unsigned long> mult;
  for (int p : parts_) ++mult[p];
  Integer z = 1;
  for (auto [part, m] : mult) {
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(part), m);
    z *= pk * factorial(m);
  }
  return z;
}

std::vector<int> Partition::padded(int n) const {
  std::vector<int> out(static_cast<std::size_t>(std::max(n, length())), 0);
  std::copy(parts_.begin(), parts_.end(), out.begin());
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int m) { return partitions_of(m, m); }

std::vector<Partition> partitions_of(int m, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  partitions_rec(m, m, max_len, cur, out);
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw ParseError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string("invalid ") + what + ": '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what);
  return out;
}

std::string join(const std::vector<int>& v, int offset) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i] + offset);
  }
  return out;
}

} // namespace

std::string to_string(const Partition& p) { return join(p.parts(), 0); }

Partition parse_partition(std::string_view text) {
  try {
    return Partition(parse_int_list(text, "partition"));
  } catch (const SizeMismatch& e) {
    throw ParseError(std::string("invalid partition '") + std::string(text) + "': " + e.what());
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)])
      throw SizeMismatch("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(m));
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Permutation Permutation::transposition(int m, int a, int b) {
  Permutation p = identity(m);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    p.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::num_cycles() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) seen[y] = true;
  }
  return cycles;
}

int Permutation::fixed_points() const {
  int f = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) f += images_[x] == static_cast<int>(x);
  return f;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw SizeMismatch("composing permutations of different degree");
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x)
    p.images_[x] = a.images_[static_cast<std::size_t>(b.images_[x])];
  return p;
}

Partition cycle_type(const Permutation& s) {
  const auto& im = s.images();
  std::vector<bool> seen(im.size(), false);
  std::vector<int> lengths;
  for (std::size_t x = 0; x < im.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(im[y])) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

int nu(const Permutation& s) { return s.degree() - s.num_cycles(); }

int sign(const Permutation& s) { return nu(s) % 2 == 0 ? 1 : -1; }

std::string to_string(const Permutation& s) { return join(s.images(), 1); }

Permutation parse_permutation(std::string_view text) {
  auto v = parse_int_list(text, "permutation");
  for (auto& x : v) --x;
  try {
    return Permutation(std::move(v));
  } catch (const SizeMismatch&) {
    throw ParseError("not a permutation: '" + std::string(text) + "'");
  }
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> adjacent_word(const Permutation& g) {
  // Sorting the one-line array by swapping positions j, j+1 right-multiplies
  // by s_j; once sorted, g * s_{w0} * ... * s_{wk} = id.
  std::vector<int> a = g.images();
  std::vector<int> word;
  const int m = g.degree();
  for (int pass = 0; pass < m; ++pass) {
    bool swapped = false;
    for (int j = 0; j + 1 < m - pass; ++j) {
      if (a[static_cast<std::size_t>(j)] > a[static_cast<std::size_t>(j) + 1]) {
        std::swap(a[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j) + 1]);
        word.push_back(j);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return word;
}

} // namespace adet
