#pragma once

#include "adet/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adet {

/// Weakly decreasing list of positive parts.
class Partition {
public:
  Partition() = default;
  /// Drops trailing zeros; throws SizeMismatch if the parts are not a partition.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// lambda_i with zero padding (0-based i).
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;
  /// Order of the centralizer of a permutation of this cycle type.
  Integer centralizer_order() const;
  /// Parts padded with zeros to length n.
  std::vector<int> padded(int n) const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// All partitions of m in reverse lexicographic order: (m), (m-1,1), ...
std::vector<Partition> partitions_of(int m);
/// Partitions of m with at most max_len parts, reverse lexicographic.
std::vector<Partition> partitions_of(int m, int max_len);

/// "3,1"
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

/// Permutation of {0, ..., m-1} in one-line notation. Composition follows
/// function notation: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  /// Throws SizeMismatch unless images is a bijection of {0..m-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  /// Transposition of the 0-based points a and b in S_m.
  static Permutation transposition(int m, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int num_cycles() const;
  int fixed_points() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

Partition cycle_type(const Permutation& s);
/// Cyclic weight: degree minus number of cycles.
int nu(const Permutation& s);
/// +1 or -1.
int sign(const Permutation& s);

/// One-line images, 1-based: "2,3,1".
std::string to_string(const Permutation& s);
Permutation parse_permutation(std::string_view text);

/// Every permutation of S_m in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int m);

/// Adjacent-transposition word for g, found by bubble sort. Entry j stands for
/// s_j = (j, j+1), 0-based. g equals the product s_{w[k-1]} * ... * s_{w[0]},
/// so applying the entries to a vector in the stored order applies g.
std::vector<int> adjacent_word(const Permutation& g);

} // namespace adet
